fn main() -> std::process::ExitCode {
    lagsub::cli::main()
}

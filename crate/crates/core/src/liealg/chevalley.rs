use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::exactlin::int;
use crate::rootsys::RootSystem;

/// Structure constants `N_{α,β}` with `[e_α, e_β] = N_{α,β} e_{α+β}` for every
/// ordered pair whose sum is a root.
///
/// Signs are fixed by declaring `N = +(p+1)` on extraspecial pairs and
/// propagating with the standard relations between the constants of a
/// Chevalley basis with `[e_α, e_{-α}] = α∨`.
pub(crate) fn chevalley_constants(rs: &RootSystem) -> HashMap<(usize, usize), i64> {
    let mut table: HashMap<(usize, usize), i64> = HashMap::new();
    let n_pos = rs.num_positive();
    for xi in 0..n_pos {
        let pairs: Vec<(usize, usize)> = (0..n_pos)
            .flat_map(|a| (a + 1..n_pos).map(move |b| (a, b)))
            .filter(|&(a, b)| rs.sum(a, b) == Some(xi))
            .collect();
        let Some(&(g, d)) = pairs.first() else { continue };
        table.insert((g, d), string_p(rs, g, d) + 1);
        let xi_norm = rs.norm(xi).clone();
        for &(a, b) in &pairs[1..] {
            let (ng, nd) = (rs.neg(g), rs.neg(d));
            let mut acc = BigRational::from_integer(0.into());
            if let Some(c) = rs.sum(b, ng) {
                acc += int(lookup(rs, &table, b, ng) * lookup(rs, &table, a, nd)) / rs.norm(c).clone();
            }
            if let Some(c) = rs.sum(a, ng) {
                acc += int(lookup(rs, &table, ng, a) * lookup(rs, &table, b, nd)) / rs.norm(c).clone();
            }
            let v = -(xi_norm.clone() * acc) / int(lookup(rs, &table, ng, nd));
            table.insert((a, b), as_integer(&v));
        }
    }
    let mut all = HashMap::new();
    for a in 0..rs.num_roots() {
        for b in 0..rs.num_roots() {
            if rs.sum(a, b).is_some() {
                all.insert((a, b), lookup(rs, &table, a, b));
            }
        }
    }
    all
}

/// Largest `p` with `β - pα` a root.
pub(crate) fn string_p(rs: &RootSystem, alpha: usize, beta: usize) -> i64 {
    let mut p = 0;
    let mut cur = beta;
    while let Some(next) = rs.difference(cur, alpha) {
        p += 1;
        cur = next;
    }
    p
}

fn as_integer(v: &BigRational) -> i64 {
    assert!(v.is_integer(), "non-integral structure constant {v}");
    v.to_integer().to_i64().expect("small structure constant")
}

/// `N_{a,b}` from the table of positive pairs, reducing negative and mixed pairs.
fn lookup(rs: &RootSystem, table: &HashMap<(usize, usize), i64>, a: usize, b: usize) -> i64 {
    let (pa, pb) = (rs.is_positive(a), rs.is_positive(b));
    if pa && pb {
        return if a < b { table[&(a, b)] } else { -table[&(b, a)] };
    }
    if !pa && !pb {
        return -lookup(rs, table, rs.neg(a), rs.neg(b));
    }
    // a + b + g = 0 gives N_{a,b}/(g,g) = N_{b,g}/(a,a) = N_{g,a}/(b,b)
    let g = rs.neg(rs.sum(a, b).expect("a + b is a root"));
    let gn = rs.norm(g).clone();
    let v = if rs.is_positive(g) == pa {
        gn / rs.norm(b).clone() * int(lookup(rs, table, g, a))
    } else {
        gn / rs.norm(a).clone() * int(lookup(rs, table, b, g))
    };
    as_integer(&v)
}

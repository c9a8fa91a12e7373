use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::Error;
use crate::exactlin::{int, rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// Product of simple Cartan types, e.g. `A1xA1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    factors: Vec<(SimpleType, usize)>,
}

impl CartanType {
    pub fn factors(&self) -> &[(SimpleType, usize)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.1).sum()
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots, long roots of each factor having norm 2.
    pub fn gram(&self) -> Vec<Vec<BigRational>> {
        let n = self.rank();
        let mut g = vec![vec![int(0); n]; n];
        let mut off = 0;
        for &(t, r) in &self.factors {
            let block = simple_gram(t, r);
            for i in 0..r {
                for j in 0..r {
                    g[off + i][off + j] = block[i][j].clone();
                }
            }
            off += r;
        }
        g
    }
}

fn simple_gram(t: SimpleType, n: usize) -> Vec<Vec<BigRational>> {
    let mut g = vec![vec![int(0); n]; n];
    let link = |g: &mut Vec<Vec<BigRational>>, i: usize, j: usize, v: BigRational| {
        g[i][j] = v.clone();
        g[j][i] = v;
    };
    match t {
        SimpleType::A => {
            for i in 0..n {
                g[i][i] = int(2);
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut g, i, i + 1, int(-1));
            }
        }
        SimpleType::B => {
            for i in 0..n {
                g[i][i] = int(2);
            }
            g[n - 1][n - 1] = int(1);
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, int(-1));
            }
        }
        SimpleType::C => {
            for i in 0..n {
                g[i][i] = int(1);
            }
            g[n - 1][n - 1] = int(2);
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, rat(-1, 2));
            }
            link(&mut g, n - 2, n - 1, int(-1));
        }
        SimpleType::D => {
            for i in 0..n {
                g[i][i] = int(2);
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, int(-1));
            }
            link(&mut g, n - 3, n - 1, int(-1));
        }
        SimpleType::E => {
            for i in 0..n {
                g[i][i] = int(2);
            }
            // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4
            link(&mut g, 0, 2, int(-1));
            link(&mut g, 1, 3, int(-1));
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, int(-1));
            }
        }
        SimpleType::F => {
            g[0][0] = int(2);
            g[1][1] = int(2);
            g[2][2] = int(1);
            g[3][3] = int(1);
            link(&mut g, 0, 1, int(-1));
            link(&mut g, 1, 2, int(-1));
            link(&mut g, 2, 3, rat(-1, 2));
        }
        SimpleType::G => {
            g[0][0] = rat(2, 3);
            g[1][1] = int(2);
            link(&mut g, 0, 1, int(-1));
        }
    }
    g
}

fn parse_factor(s: &str) -> Option<(SimpleType, usize)> {
    let mut chars = s.chars();
    let t = match chars.next()?.to_ascii_uppercase() {
        'A' => SimpleType::A,
        'B' => SimpleType::B,
        'C' => SimpleType::C,
        'D' => SimpleType::D,
        'E' => SimpleType::E,
        'F' => SimpleType::F,
        'G' => SimpleType::G,
        _ => return None,
    };
    let n: usize = chars.as_str().parse().ok()?;
    let ok = match t {
        SimpleType::A => n >= 1,
        SimpleType::B | SimpleType::C => n >= 2,
        SimpleType::D => n >= 4,
        SimpleType::E => (6..=8).contains(&n),
        SimpleType::F => n == 4,
        SimpleType::G => n == 2,
    };
    ok.then_some((t, n))
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::UnknownCartanType(s.to_string()));
        }
        let factors = trimmed
            .split(['x', 'X', '*'])
            .map(|f| parse_factor(f.trim()).ok_or_else(|| Error::UnknownCartanType(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CartanType { factors })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|(t, n)| format!("{t:?}{n}")).collect();
        f.write_str(&parts.join("x"))
    }
}

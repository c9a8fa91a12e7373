use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Scalar, Subspace};
use crate::lagrange::Quadruple;
use crate::liealg::LieAlgebra;
use crate::rootsys::RootSet;

/// Quadruple document. Roots are written as `"(1,0)"` in simple-root
/// coordinates and scalars as exact literals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadrupleJson {
    #[serde(rename = "P")]
    pub p: Vec<String>,
    #[serde(rename = "Pprime")]
    pub p_prime: Vec<String>,
    #[serde(default)]
    pub sigma: BTreeMap<String, String>,
    #[serde(default)]
    pub xi_scalars: BTreeMap<String, String>,
    /// Coefficients in the basis order reported by the tool; empty means `0`.
    #[serde(default)]
    pub x: Vec<String>,
    #[serde(default)]
    pub l0: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceJson {
    pub basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFormJson {
    pub preset: Option<String>,
    pub lattice: Option<Vec<Vec<String>>>,
}

pub struct Codec<'a> {
    pub g: &'a LieAlgebra,
    pub field: FieldSpec,
}

pub fn rational_str(r: &BigRational) -> String {
    Scalar::from(r.clone()).to_string()
}

impl<'a> Codec<'a> {
    pub fn new(g: &'a LieAlgebra, field: FieldSpec) -> Self {
        Codec { g, field }
    }

    pub fn root(&self, i: usize) -> String {
        let coords: Vec<String> = self.g.root_system().root(i).iter().map(i64::to_string).collect();
        format!("({})", coords.join(","))
    }

    pub fn roots(&self, set: &RootSet) -> Vec<String> {
        set.iter().map(|a| self.root(a)).collect()
    }

    pub fn parse_root(&self, text: &str) -> Result<usize> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let coords: Vec<i64> = inner
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Schema(format!("malformed root `{text}`")))?;
        self.g.root_system().index_of(&coords).ok_or_else(|| Error::Schema(format!("`{text}` is not a root")))
    }

    pub fn scalar(&self, text: &str) -> Result<Scalar> {
        Ok(self.field.parse(text)?)
    }

    pub fn rational(&self, text: &str) -> Result<BigRational> {
        self.scalar(text)?.to_rational().ok_or_else(|| Error::Schema(format!("`{text}` is not rational")))
    }

    pub fn vector(&self, v: &[String], len: usize) -> Result<Vec<Scalar>> {
        if v.len() != len {
            return Err(Error::DimensionMismatch { expected: len, found: v.len() });
        }
        v.iter().map(|s| self.scalar(s)).collect()
    }

    pub fn vector_str(v: &[Scalar]) -> Vec<String> {
        v.iter().map(Scalar::to_string).collect()
    }

    pub fn subspace_str(s: &Subspace<Scalar>) -> Vec<Vec<String>> {
        s.basis_vectors().iter().map(|v| Self::vector_str(v)).collect()
    }

    pub fn subspace(&self, rows: &[Vec<String>], ambient: usize) -> Result<Subspace<Scalar>> {
        let vs = rows.iter().map(|r| self.vector(r, ambient)).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(ambient, vs))
    }

    pub fn quadruple(&self, q: &QuadrupleJson) -> Result<Quadruple> {
        let g = self.g;
        let roots = |v: &[String]| -> Result<RootSet> {
            Ok(RootSet::new(v.iter().map(|s| self.parse_root(s)).collect::<Result<_>>()?))
        };
        let sigma = q
            .sigma
            .iter()
            .map(|(a, b)| Ok((self.parse_root(a)?, self.parse_root(b)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let xi_scalars = q
            .xi_scalars
            .iter()
            .map(|(a, c)| Ok((self.parse_root(a)?, self.scalar(c)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let x = if q.x.is_empty() { vec![Scalar::zero(); g.dim()] } else { self.vector(&q.x, g.dim())? };
        let l0 = q.l0.iter().map(|r| self.vector(r, 2 * g.cartan_dim())).collect::<Result<_>>()?;
        Ok(Quadruple { p: roots(&q.p)?, p_prime: roots(&q.p_prime)?, sigma, xi_scalars, x, l0 })
    }

    pub fn quadruple_json(&self, q: &Quadruple) -> QuadrupleJson {
        QuadrupleJson {
            p: self.roots(&q.p),
            p_prime: self.roots(&q.p_prime),
            sigma: q.sigma.iter().map(|(&a, &b)| (self.root(a), self.root(b))).collect(),
            xi_scalars: q.xi_scalars.iter().map(|(&a, c)| (self.root(a), c.to_string())).collect(),
            x: Self::vector_str(&q.x),
            l0: q.l0.iter().map(|r| Self::vector_str(r)).collect(),
        }
    }
}

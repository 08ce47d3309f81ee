//! Matrix factorizations `φψ = ψφ = s·f·I` of a hypersurface `f`, with the
//! syzygy swap, the Knörrer block construction and cokernel presentations.
//!
//! The sign `s = ±1` is tracked explicitly: products of the Knörrer blocks
//! naturally give `f − uv` while the target ring is written `uv − f`.

use crate::error::{Error, Result};
use crate::io::{parse_poly_matrix, poly_matrix_strings, MfFile, SCHEMA_VERSION};
use crate::scalars::{Matrix, Polynomial, Ring};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixFactorization {
    pub vars: Vec<String>,
    pub f: Polynomial,
    pub phi: Matrix<Polynomial>,
    pub psi: Matrix<Polynomial>,
    pub sign: i8,
}

/// Which of the two products an offending entry was found in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Product {
    #[serde(rename = "phi*psi")]
    PhiPsi,
    #[serde(rename = "psi*phi")]
    PsiPhi,
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Product::PhiPsi => write!(f, "phi*psi"),
            Product::PsiPhi => write!(f, "psi*phi"),
        }
    }
}

/// First entry (1-based, row-major, `φψ` before `ψφ`) that differs from `s·f·I`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub product: Product,
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Validation {
    pub valid: bool,
    pub sign: i8,
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CokernelKind {
    /// `φ` is invertible over the local ring.
    Zero,
    /// `ψ` is invertible, so `coker φ` is free.
    Free,
    NonFree,
}

/// `coker φ` over `k[vars]/(f)`: one generator per row, one relation per column.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Presentation {
    pub vars: Vec<String>,
    pub f: String,
    pub generators: usize,
    pub columns: Vec<Vec<String>>,
    pub kind: CokernelKind,
}

fn constant_term(p: &Polynomial) -> bool {
    p.terms().any(|(m, _)| m.is_one())
}

impl MatrixFactorization {
    /// Checks shapes and variables. Without an explicit sign it is read off
    /// the first diagonal entry of `φψ`, defaulting to `+1`.
    pub fn new(
        vars: Vec<String>,
        f: Polynomial,
        phi: Matrix<Polynomial>,
        psi: Matrix<Polynomial>,
        sign: Option<i8>,
    ) -> Result<Self> {
        let (a, b) = phi.shape();
        if a != b || a == 0 {
            return Err(Error::ShapeMismatch {
                arrow: "phi".into(),
                expected: (a.max(1), a.max(1)),
                got: (a, b),
            });
        }
        if psi.shape() != (a, a) {
            return Err(Error::ShapeMismatch {
                arrow: "psi".into(),
                expected: (a, a),
                got: psi.shape(),
            });
        }
        let names: BTreeSet<&String> = vars.iter().collect();
        if names.len() != vars.len() {
            return Err(Error::InvalidInput("repeated variable name".into()));
        }
        if f.is_zero() || constant_term(&f) {
            return Err(Error::InvalidInput(format!(
                "f = {f} must be a nonzero nonunit"
            )));
        }
        for p in std::iter::once(&f)
            .chain(phi.to_rows().iter().flatten())
            .chain(psi.to_rows().iter().flatten())
        {
            if !p.is_polynomial() {
                return Err(Error::InvalidInput(format!("negative exponent in {p}")));
            }
            if let Some(v) = p.vars().into_iter().find(|v| !names.contains(v)) {
                return Err(Error::InvalidInput(format!("undeclared variable `{v}`")));
            }
        }
        let sign = match sign {
            Some(s @ (1 | -1)) => s,
            Some(s) => {
                return Err(Error::InvalidInput(format!(
                    "sign must be 1 or -1, got {s}"
                )))
            }
            None => {
                let d = phi.mul(&psi).get(0, 0).clone();
                if d == f.neg() {
                    -1
                } else {
                    1
                }
            }
        };
        Ok(Self {
            vars,
            f,
            phi,
            psi,
            sign,
        })
    }

    pub fn from_file(file: &MfFile) -> Result<Self> {
        let f = Polynomial::parse(&file.f).map_err(|e| Error::InvalidInput(format!("f: {e}")))?;
        let phi = parse_poly_matrix(&file.phi)?;
        let psi = parse_poly_matrix(&file.psi)?;
        Self::new(file.vars.clone(), f, phi, psi, file.sign)
    }

    pub fn to_file(&self) -> MfFile {
        let strings = |m: &Matrix<Polynomial>| -> Vec<Vec<crate::io::Scalar>> {
            poly_matrix_strings(m)
                .into_iter()
                .map(|r| r.into_iter().map(crate::io::Scalar::Str).collect())
                .collect()
        };
        MfFile {
            version: Some(SCHEMA_VERSION),
            vars: self.vars.clone(),
            f: self.f.to_string(),
            phi: strings(&self.phi),
            psi: strings(&self.psi),
            sign: Some(self.sign),
        }
    }

    pub fn size(&self) -> usize {
        self.phi.rows()
    }

    /// `s·f`.
    pub fn signed_f(&self) -> Polynomial {
        if self.sign < 0 {
            self.f.neg()
        } else {
            self.f.clone()
        }
    }

    pub fn validate(&self) -> Validation {
        let sf = self.signed_f();
        let target = Matrix::scalar(self.size(), sf.clone());
        for (product, m) in [
            (Product::PhiPsi, self.phi.mul(&self.psi)),
            (Product::PsiPhi, self.psi.mul(&self.phi)),
        ] {
            for i in 0..self.size() {
                for j in 0..self.size() {
                    if m.get(i, j) != target.get(i, j) {
                        return Validation {
                            valid: false,
                            sign: self.sign,
                            witness: Some(Witness {
                                product,
                                row: i + 1,
                                col: j + 1,
                                expected: target.get(i, j).to_string(),
                                got: m.get(i, j).to_string(),
                            }),
                        };
                    }
                }
            }
        }
        Validation {
            valid: true,
            sign: self.sign,
            witness: None,
        }
    }

    fn require_valid(&self) -> Result<()> {
        match self.validate().witness {
            None => Ok(()),
            Some(w) => Err(Error::InvalidInput(format!(
                "not a matrix factorization: entry ({}, {}) of {} is {}, expected {}",
                w.row, w.col, w.product, w.got, w.expected
            ))),
        }
    }

    /// The pair `(ψ, φ)`, presenting the syzygy of `coker φ`.
    pub fn syzygy(&self) -> Result<Self> {
        self.require_valid()?;
        Ok(Self {
            phi: self.psi.clone(),
            psi: self.phi.clone(),
            ..self.clone()
        })
    }

    /// `Φ = [[−φ, −uI], [s·vI, ψ]]`, `Ψ = [[−ψ, −uI], [s·vI, φ]]` over
    /// `uv − f`, with sign `−s`.
    pub fn knorrer(&self, u: &str, v: &str) -> Result<Self> {
        self.require_valid()?;
        if u == v || self.vars.iter().any(|x| x == u || x == v) {
            return Err(Error::InvalidInput(format!(
                "variables `{u}`, `{v}` must be fresh and distinct"
            )));
        }
        let a = self.size();
        let pu = Polynomial::var(u);
        let pv = Polynomial::var(v);
        let minus_u = Matrix::scalar(a, pu.neg());
        let sv = Matrix::scalar(a, if self.sign < 0 { pv.neg() } else { pv.clone() });
        let phi = Matrix::block(&self.phi.neg(), &minus_u, &sv, &self.psi);
        let psi = Matrix::block(&self.psi.neg(), &minus_u, &sv, &self.phi);
        let mut vars = self.vars.clone();
        vars.push(u.to_string());
        vars.push(v.to_string());
        Ok(Self {
            vars,
            f: pu.mul(&pv).sub(&self.f),
            phi,
            psi,
            sign: -self.sign,
        })
    }

    /// Columns of `φ` as relations of `coker φ`.
    pub fn cokernel_presentation(&self) -> Presentation {
        let a = self.size();
        let kind = if constant_term(&self.phi.det()) {
            CokernelKind::Zero
        } else if constant_term(&self.psi.det()) {
            CokernelKind::Free
        } else {
            CokernelKind::NonFree
        };
        Presentation {
            vars: self.vars.clone(),
            f: self.f.to_string(),
            generators: a,
            columns: (0..a)
                .map(|j| self.phi.column(j).iter().map(|p| p.to_string()).collect())
                .collect(),
            kind,
        }
    }

    /// `det φ · det ψ = (s·f)^a`.
    pub fn determinant_identity(&self) -> bool {
        self.phi.det().mul(&self.psi.det()) == self.signed_f().pow(self.size() as u32)
    }
}

/// Solves `ψ = s·f·adj(φ)/det φ` entrywise, when every quotient is exact.
pub fn partner(f: &Polynomial, phi: &Matrix<Polynomial>, sign: i8) -> Option<Matrix<Polynomial>> {
    let det = phi.det();
    if det.is_zero() {
        return None;
    }
    let sf = if sign < 0 { f.neg() } else { f.clone() };
    let adj = phi.adjugate();
    let rows = adj
        .to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|p| sf.mul(p).div_exact(&det))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

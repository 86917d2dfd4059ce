use std::fmt;

use super::stratification::StratifiedComplex;

/// A fault found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A maximal simplex below the top dimension.
    NotPure {
        simplex: String,
        dim: usize,
    },
    /// A filtration member declared with codimension below 2.
    CodimTooSmall {
        member: usize,
        codim: usize,
    },
    /// An `(n-1)`-simplex outside the singular set lying in more than two
    /// top simplices.
    Branching {
        face: String,
        cofaces: usize,
    },
    EmptyComplex,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotPure { simplex, dim } => {
                write!(f, "non-pure: maximal simplex {simplex} has dimension {dim}")
            }
            Violation::CodimTooSmall { member, codim } => write!(
                f,
                "codim-2 condition: filtration member {member} has codimension {codim}"
            ),
            Violation::Branching { face, cofaces } => write!(
                f,
                "pseudomanifold fault: face {face} lies in {cofaces} top simplices"
            ),
            Violation::EmptyComplex => write!(f, "empty complex"),
        }
    }
}

/// Outcome of [`validate`]: faults, boundary faces, and advisory hints.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// `(n-1)`-simplices outside the singular set lying in exactly one top
    /// simplex. They make the space a pseudomanifold with boundary, which
    /// the relative computations rely on, so they are not faults.
    pub boundary_faces: Vec<String>,
    pub hints: Vec<String>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks purity, the codimension-two condition and the pseudomanifold
/// condition off the singular set. Never fails; the report lists faults.
pub fn validate(x: &StratifiedComplex) -> ValidationReport {
    let mut report = ValidationReport::default();
    let k = x.complex();
    let Some(n) = k.dim() else {
        report.violations.push(Violation::EmptyComplex);
        return report;
    };
    for s in k.maximal_simplices() {
        if s.dim() != n {
            report.violations.push(Violation::NotPure {
                simplex: k.display_simplex(&s),
                dim: s.dim(),
            });
        }
    }
    for (j, m) in x.members().iter().enumerate() {
        if m.codim() < 2 {
            report.violations.push(Violation::CodimTooSmall {
                member: j,
                codim: m.codim(),
            });
        }
    }
    if n > 0 {
        let strata = x.stratification();
        for (i, cof) in k.cofaces(n).iter().enumerate() {
            let face = &k.simplices(n - 1)[i];
            if strata.is_singular(face) {
                continue;
            }
            match cof.len() {
                1 => report.boundary_faces.push(k.display_simplex(face)),
                c if c > 2 => report.violations.push(Violation::Branching {
                    face: k.display_simplex(face),
                    cofaces: c,
                }),
                _ => {}
            }
        }
    }
    for (j, m) in x.members().iter().enumerate() {
        let missing = k.all_simplices().find(|s| {
            s.dim() > 0 && !m.contains(s) && s.vertices().iter().all(|v| m.vertices().contains(v))
        });
        if let Some(s) = missing {
            report.hints.push(format!(
                "filtration member {j} is not a full subcomplex ({} spans it but is not in it); \
                 apply one barycentric subdivision so chain-level intersection homology matches the sheaf-level one",
                k.display_simplex(s)
            ));
        }
    }
    report
}

//! Quadratic characters and cuspidal symbols.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("invalid label {0:?}: use letters, digits and '_'")]
    BadLabel(String),
    #[error("cuspidal dimension must be positive")]
    ZeroDim,
    #[error("segment [{b}, {a}] has non-integral or negative length")]
    BadSegment { b: String, a: String },
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// A quadratic character of `F^*`, written as a product of named generators.
///
/// Distinct names are independent classes in `F^*/F^*2`, so the group law is the
/// symmetric difference of name sets and every element squares to the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QuadChar {
    names: BTreeSet<Arc<str>>,
}

impl QuadChar {
    pub fn trivial() -> Self {
        QuadChar::default()
    }

    pub fn named(label: &str) -> Result<Self, SymbolError> {
        if !valid_label(label) {
            return Err(SymbolError::BadLabel(label.to_string()));
        }
        let mut names = BTreeSet::new();
        names.insert(Arc::from(label));
        Ok(QuadChar { names })
    }

    pub fn is_trivial(&self) -> bool {
        self.names.is_empty()
    }

    pub fn mul(&self, other: &QuadChar) -> QuadChar {
        if other.is_trivial() {
            return self.clone();
        }
        if self.is_trivial() {
            return other.clone();
        }
        QuadChar { names: self.names.symmetric_difference(&other.names).cloned().collect() }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| &**s)
    }
}

impl fmt::Display for QuadChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        f.write_str("chi:")?;
        for (i, n) in self.names.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            f.write_str(n)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuadChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SelfDualType {
    Orthogonal,
    Symplectic,
    /// Not self-dual; the contragredient is the symbol with the `*` mark toggled.
    NonSelfDual,
}

impl SelfDualType {
    pub fn code(self) -> char {
        match self {
            SelfDualType::Orthogonal => 'o',
            SelfDualType::Symplectic => 's',
            SelfDualType::NonSelfDual => 'n',
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Base {
    /// The trivial character of `GL(1)`.
    Trivial,
    Symbol {
        label: Arc<str>,
        dim: u32,
        kind: SelfDualType,
    },
}

/// A unitary supercuspidal representation of some `GL(k)`, as a formal symbol.
///
/// Quadratic characters are the trivial base with a non-trivial twist. The derived
/// order follows the rendered label for the bases that occur in practice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cuspidal {
    base: Base,
    twist: QuadChar,
}

impl Cuspidal {
    pub fn trivial() -> Self {
        Cuspidal { base: Base::Trivial, twist: QuadChar::trivial() }
    }

    /// The character `chi` of `GL(1)`.
    pub fn quadratic(chi: QuadChar) -> Self {
        Cuspidal { base: Base::Trivial, twist: chi }
    }

    /// A named symbol. Non-self-dual labels may end with `*`, which marks the dual.
    pub fn symbol(label: &str, dim: u32, kind: SelfDualType) -> Result<Self, SymbolError> {
        let stem = match kind {
            SelfDualType::NonSelfDual => label.strip_suffix('*').unwrap_or(label),
            _ => label,
        };
        if !valid_label(stem) {
            return Err(SymbolError::BadLabel(label.to_string()));
        }
        if dim == 0 {
            return Err(SymbolError::ZeroDim);
        }
        Ok(Cuspidal { base: Base::Symbol { label: Arc::from(label), dim, kind }, twist: QuadChar::trivial() })
    }

    pub fn dim(&self) -> u32 {
        match &self.base {
            Base::Trivial => 1,
            Base::Symbol { dim, .. } => *dim,
        }
    }

    pub fn self_dual_type(&self) -> SelfDualType {
        match &self.base {
            Base::Trivial => SelfDualType::Orthogonal,
            Base::Symbol { kind, .. } => *kind,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_dual_type() != SelfDualType::NonSelfDual
    }

    pub fn is_orthogonal(&self) -> bool {
        self.self_dual_type() == SelfDualType::Orthogonal
    }

    pub fn is_symplectic(&self) -> bool {
        self.self_dual_type() == SelfDualType::Symplectic
    }

    /// True only for `1_{GL(1)}` itself.
    pub fn is_trivial_character(&self) -> bool {
        self.base == Base::Trivial && self.twist.is_trivial()
    }

    pub fn twist(&self) -> &QuadChar {
        &self.twist
    }

    /// The label of the untwisted base: `"1"` or the symbol name.
    pub fn base_label(&self) -> &str {
        match &self.base {
            Base::Trivial => "1",
            Base::Symbol { label, .. } => label,
        }
    }

    pub fn dual(&self) -> Cuspidal {
        match &self.base {
            Base::Symbol { label, dim, kind: SelfDualType::NonSelfDual } => {
                let toggled: Arc<str> = match label.strip_suffix('*') {
                    Some(stem) => Arc::from(stem),
                    None => Arc::from(format!("{label}*")),
                };
                Cuspidal {
                    base: Base::Symbol { label: toggled, dim: *dim, kind: SelfDualType::NonSelfDual },
                    twist: self.twist.clone(),
                }
            }
            _ => self.clone(),
        }
    }

    pub fn twisted(&self, chi: &QuadChar) -> Cuspidal {
        Cuspidal { base: self.base.clone(), twist: self.twist.mul(chi) }
    }
}

impl fmt::Display for Cuspidal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            Base::Trivial => write!(f, "{}", self.twist),
            Base::Symbol { label, dim, kind } => {
                write!(f, "rho:{label}:{dim}:{}", kind.code())?;
                if !self.twist.is_trivial() {
                    write!(f, ".{}", self.twist)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Cuspidal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

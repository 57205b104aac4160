//! The shared configuration (n, ℓ, t) that every Hecke and Laurent element
//! points back to.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::coeffring::{CoeffError, Deformation, ParamPoly};
use crate::cyclotomic::{Cyclotomic, CyclotomicError, CyclotomicField};
use crate::group::{Group, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("operation requires n = {required}, algebra has n = {n}")]
    Unsupported { required: usize, n: usize },
}

struct Inner {
    n: usize,
    ell: u32,
    field: Arc<CyclotomicField>,
    group: Group,
    deformation: Deformation,
}

/// Cheap, cloneable handle to one algebra H (and its Laurent target).
#[derive(Clone)]
pub struct Algebra {
    inner: Arc<Inner>,
}

impl Algebra {
    /// H with formal parameters t_1, …, t_n.
    pub fn symbolic(n: usize, ell: u32) -> Result<Self, AlgebraError> {
        let field = CyclotomicField::new(ell)?;
        let group = Group::new(n, &field)?;
        let deformation = Deformation::symbolic(&field, n)?;
        Ok(Self::assemble(field, group, deformation))
    }

    /// H with t_i specialized to the given elements of Q(ζ).
    pub fn specialized(n: usize, ell: u32, values: Vec<Cyclotomic>) -> Result<Self, AlgebraError> {
        let field = CyclotomicField::new(ell)?;
        let group = Group::new(n, &field)?;
        if values.len() != n {
            return Err(CoeffError::WrongArity {
                expected: n,
                got: values.len(),
            }
            .into());
        }
        // re-home values built against another Arc of the same field
        let values = values.iter().map(|v| field.from_poly(v.coeffs())).collect();
        let deformation = Deformation::specialized(&field, values)?;
        Ok(Self::assemble(field, group, deformation))
    }

    /// The same (n, ℓ) with every t_i set to zero.
    pub fn undeformed(n: usize, ell: u32) -> Result<Self, AlgebraError> {
        let field = CyclotomicField::new(ell)?;
        Self::specialized(n, ell, vec![field.zero(); n])
    }

    fn assemble(field: Arc<CyclotomicField>, group: Group, deformation: Deformation) -> Self {
        Algebra {
            inner: Arc::new(Inner {
                n: group.n(),
                ell: field.ell(),
                field,
                group,
                deformation,
            }),
        }
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn ell(&self) -> u32 {
        self.inner.ell
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.inner.field
    }

    pub fn group(&self) -> &Group {
        &self.inner.group
    }

    pub fn deformation(&self) -> &Deformation {
        &self.inner.deformation
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<(), AlgebraError> {
        if i == 0 || i > self.n() {
            Err(AlgebraError::IndexOutOfRange {
                index: i,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    pub fn zero_coeff(&self) -> ParamPoly {
        self.inner.deformation.zero()
    }

    pub fn one_coeff(&self) -> ParamPoly {
        self.inner.deformation.one()
    }

    pub fn t(&self, i: usize) -> &ParamPoly {
        self.inner.deformation.t(i)
    }

    pub fn tau(&self, i: usize) -> Result<ParamPoly, AlgebraError> {
        Ok(self.inner.deformation.tau(i)?)
    }

    pub fn tau_tilde(&self, i: usize) -> Result<ParamPoly, AlgebraError> {
        Ok(self.inner.deformation.tau_tilde(i)?)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("n", &self.n())
            .field("ell", &self.ell())
            .field("symbolic", &self.deformation().is_symbolic())
            .finish()
    }
}

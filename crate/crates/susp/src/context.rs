use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
struct Inner {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

/// Ordered list of distinct variable names. Immutable; cheap to clone and
/// share between polynomials. The order is authoritative: it fixes the
/// canonical term order, Jacobian column order, and printing.
#[derive(Clone, Debug)]
pub struct Context {
    inner: Arc<Inner>,
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl Eq for Context {}

impl std::hash::Hash for Context {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.names.hash(state);
    }
}

impl Context {
    /// Build a context from variable names. Names must be distinct and
    /// nonempty. An empty list is allowed and denotes the constants-only
    /// ring.
    pub fn new<I, S>(names: I) -> Result<Context>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::ContextMismatch("empty variable name".into()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::ContextMismatch(format!(
                    "duplicate variable name `{name}`"
                )));
            }
        }
        Ok(Context {
            inner: Arc::new(Inner { names, index }),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.inner.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.inner.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.inner.index.contains_key(name)
    }

    /// New context with extra variables appended at the end.
    pub fn extend<I, S>(&self, extra: I) -> Result<Context>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names = self.inner.names.clone();
        names.extend(extra.into_iter().map(Into::into));
        Context::new(names)
    }

    /// Union of two contexts: this context's variables first, then the
    /// other's unseen variables in their order. Shared variables must
    /// appear in the same relative order in both contexts, otherwise the
    /// union would have to contradict one of the declared orders.
    pub fn merge(&self, other: &Context) -> Result<Context> {
        let shared: Vec<&String> = self
            .names()
            .iter()
            .filter(|n| other.contains(n))
            .collect();
        let shared_in_other: Vec<&String> = other
            .names()
            .iter()
            .filter(|n| self.contains(n))
            .collect();
        if shared != shared_in_other {
            return Err(Error::ContextMismatch(format!(
                "shared variables appear in conflicting orders: {:?} vs {:?}",
                shared, shared_in_other
            )));
        }
        let mut names = self.inner.names.clone();
        for n in other.names() {
            if !self.contains(n) {
                names.push(n.clone());
            }
        }
        Context::new(names)
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.inner.names.join(", "))
    }
}

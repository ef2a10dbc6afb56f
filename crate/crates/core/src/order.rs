//! The graded reverse lexicographic ordering attached to a variable table.

use alloc::sync::Arc;
use core::cmp::Ordering;
use core::fmt;

use crate::monomial::Monomial;
use crate::vars::VariableTable;

/// A monomial ordering over a fixed table. The kind is always grevlex;
/// the table fixes arity and display names.
#[derive(Clone, Debug)]
pub struct MonomialOrder {
    table: Arc<VariableTable>,
}

/// Operands built over different variable tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMismatch {
    pub expected: usize,
    pub got: usize,
}

impl fmt::Display for TableMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "variable table mismatch: expected {} variables, got {}",
            self.expected, self.got
        )
    }
}

impl MonomialOrder {
    pub fn grevlex(table: Arc<VariableTable>) -> Self {
        MonomialOrder { table }
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn nvars(&self) -> usize {
        self.table.len()
    }

    /// Compare two monomials under this order, checking both live over
    /// the order's table.
    pub fn compare_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, TableMismatch> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(TableMismatch {
                    expected: self.nvars(),
                    got: m.nvars(),
                });
            }
        }
        Ok(a.cmp(b))
    }

    pub fn name(&self, index: usize) -> &str {
        self.table.name(index)
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.table.index_of_name(name)
    }
}

impl PartialEq for MonomialOrder {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.table, &other.table) || self.table == other.table
    }
}

impl Eq for MonomialOrder {}

/// Convenience: the grevlex order over a fresh jet table.
pub fn jet_order(m: u32, n: u32, k: u32) -> MonomialOrder {
    MonomialOrder::grevlex(VariableTable::jet(m, n, k))
}

/// Convenience: grevlex over named variables, for tests and small rings.
pub fn named_order(names: &[&str]) -> MonomialOrder {
    MonomialOrder::grevlex(VariableTable::named(names))
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "grevlex/{} vars", self.nvars())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::cmp::Ordering;

    #[test]
    fn singleton_variables_compare_by_priority() {
        // z[1,1] vs y[1,1] in the 2xn second-order jet table: z wins.
        let ord = jet_order(2, 3, 2);
        let z11 = Monomial::var(0, 18);
        let y11 = Monomial::var(6, 18);
        assert_eq!(ord.compare_monomials(&z11, &y11), Ok(Ordering::Greater));
    }

    #[test]
    fn mismatched_tables_error() {
        let ord = named_order(&["x", "y"]);
        let a = Monomial::one(2);
        let b = Monomial::one(3);
        assert!(ord.compare_monomials(&a, &b).is_err());
    }

    #[test]
    fn one_below_everything() {
        let ord = named_order(&["x", "y", "z"]);
        let one = Monomial::one(3);
        let t = Monomial::from_exps(alloc::vec![0, 1, 2]);
        assert_eq!(ord.compare_monomials(&one, &t), Ok(Ordering::Less));
    }
}

/// Search budgets shared by the enumerators and exact solvers.
///
/// Exhausting a budget is always reported as [`crate::Error::LimitExceeded`],
/// never as a negative answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Backtracking nodes for one dichromatic-number solve.
    pub dicr_nodes: u64,
    /// Backtracking nodes for one chromatic-number solve.
    pub chrom_nodes: u64,
    /// Backtracking nodes for one homomorphism search.
    pub hom_nodes: u64,
    /// Path extensions for one minimal-cycle enumeration.
    pub cycle_extensions: u64,
    /// Set-cover nodes for the realizer oracle.
    pub realizer_nodes: u64,
    /// Largest quotient the realizer oracle will enumerate linear extensions of.
    pub realizer_max_classes: usize,
    /// Largest vertex count accepted by `build_k`.
    pub k_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dicr_nodes: 20_000_000,
            chrom_nodes: 20_000_000,
            hom_nodes: 10_000_000,
            cycle_extensions: 1_000_000,
            realizer_nodes: 20_000_000,
            realizer_max_classes: 10,
            k_vertices: 4096,
        }
    }
}

impl Limits {
    /// Overrides every node/extension budget with `budget`.
    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.dicr_nodes = budget;
        self.chrom_nodes = budget;
        self.hom_nodes = budget;
        self.cycle_extensions = budget;
        self.realizer_nodes = budget;
        self
    }
}

/// Countdown used inside searches.
#[derive(Debug)]
pub(crate) struct Meter {
    what: &'static str,
    budget: u64,
    used: u64,
}

impl Meter {
    pub(crate) fn new(what: &'static str, budget: u64) -> Self {
        Meter {
            what,
            budget,
            used: 0,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> crate::Result<()> {
        self.used += 1;
        if self.used > self.budget {
            Err(crate::Error::LimitExceeded {
                what: self.what,
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}

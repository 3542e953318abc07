/// Caps applied by the arithmetic and the factor searches.
///
/// Exceeding a cap is always reported, never silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest tree degree any operation may produce or enumerate.
    pub max_degree: u32,
    /// Largest number of trees a single computed grove may hold.
    pub max_count: usize,
    /// Largest grove space `2^{c_n} - 1` that a search may enumerate in full.
    pub max_enumerated_groves: u64,
    /// Node budget of a single subset search inside division or decomposition.
    pub max_search_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 12,
            max_count: 1_000_000,
            max_enumerated_groves: (1 << 14) - 1,
            max_search_nodes: 2_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_degree(mut self, max_degree: u32) -> Self {
        self.max_degree = max_degree;
        self
    }

    pub fn with_max_count(mut self, max_count: usize) -> Self {
        self.max_count = max_count;
        self
    }
}

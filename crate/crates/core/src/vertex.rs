use std::collections::HashMap;
use std::fmt;

/// Dense vertex index. Labels live in a [`Labels`] table kept by the I/O layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i as u32)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Interning table mapping vertex names to dense ids in first-seen order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Labels {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl Labels {
    pub fn new() -> Self {
        Self::default()
    }

    /// Labels `"0"`, `"1"`, ... for generated graphs.
    pub fn numeric(n: usize) -> Self {
        let mut labels = Self::new();
        for i in 0..n {
            labels.intern(&i.to_string());
        }
        labels
    }

    pub fn intern(&mut self, name: &str) -> VertexId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = VertexId::from(self.names.len());
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn get(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    /// Name of `v`, or its `#index` rendering if it was never interned.
    pub fn name(&self, v: VertexId) -> String {
        self.names
            .get(v.index())
            .cloned()
            .unwrap_or_else(|| v.to_string())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

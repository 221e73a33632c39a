//! Append-only caches shared between threads.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

/// A keyed cache that never evicts. Readers only take the shared lock.
pub(crate) struct Memo<K, V> {
    map: RwLock<Option<HashMap<K, V>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo {
            map: RwLock::new(None),
        }
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, make: impl FnOnce() -> V) -> V {
        if let Some(v) = self
            .map
            .read()
            .unwrap()
            .as_ref()
            .and_then(|m| m.get(key))
        {
            return v.clone();
        }
        // Computed outside the lock; concurrent producers of the same key
        // compute identical values, so the first insert wins.
        let value = make();
        let mut guard = self.map.write().unwrap();
        guard
            .get_or_insert_with(HashMap::new)
            .entry(key.clone())
            .or_insert(value)
            .clone()
    }
}

/// Index-keyed table extended in order, e.g. Bernoulli numbers.
pub(crate) struct Table<V> {
    rows: RwLock<Vec<V>>,
}

impl<V: Clone> Table<V> {
    pub(crate) const fn new() -> Self {
        Table {
            rows: RwLock::new(Vec::new()),
        }
    }

    /// Returns entry `k`, extending the table with `next(&rows_so_far)` as needed.
    pub(crate) fn get(&self, k: usize, mut next: impl FnMut(&[V]) -> V) -> V {
        if let Some(v) = self.rows.read().unwrap().get(k) {
            return v.clone();
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= k {
            let v = next(&rows);
            rows.push(v);
        }
        rows[k].clone()
    }
}

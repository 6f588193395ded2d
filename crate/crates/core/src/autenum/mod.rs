//! Closure of automorphism generating sets and the centrality filtration.

mod filtration;
mod generators;
mod structure;

use rustc_hash::FxHashMap;

use crate::error::AutError;
use crate::group::{Element, Group};
use crate::morphism::{ApplyTable, GenMap};

pub use filtration::{expected_orders, filtration, Filtration, FiltrationReport, FiltrationRow};
pub use generators::{aut2_generators, aut3_h_generators, standard_generators};
pub use structure::{verify_structure, Depth};

/// Default member cap for [`closure`].
pub const DEFAULT_LIMIT: usize = 1 << 25;

/// A closed set of automorphisms of one group. Members are stored by their
/// image pair packed as `index(f(A)) << 32 | index(f(B))`, in discovery order.
#[derive(Debug, Clone)]
pub struct AutSet {
    group: Group,
    generators: Vec<GenMap>,
    keys: Vec<u64>,
    index: FxHashMap<u64, u32>,
}

impl AutSet {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn generators(&self) -> &[GenMap] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn key(&self, a: Element, b: Element) -> u64 {
        (self.group.index(a) << 32) | self.group.index(b)
    }

    pub fn key_of(&self, f: &GenMap) -> u64 {
        self.key(f.img_a(), f.img_b())
    }

    pub fn decode(&self, key: u64) -> (Element, Element) {
        (
            self.group.from_index(key >> 32),
            self.group.from_index(key & 0xffff_ffff),
        )
    }

    pub fn contains(&self, f: &GenMap) -> bool {
        f.group() == &self.group && self.index.contains_key(&self.key_of(f))
    }

    pub fn contains_pair(&self, a: Element, b: Element) -> bool {
        self.index.contains_key(&self.key(a, b))
    }

    /// Position of a member in discovery order.
    pub fn position(&self, f: &GenMap) -> Option<usize> {
        self.index.get(&self.key_of(f)).map(|&i| i as usize)
    }

    pub fn get(&self, i: usize) -> GenMap {
        let (a, b) = self.decode(self.keys[i]);
        GenMap::from_images(self.group, a, b).expect("member of this group")
    }

    /// Image pairs in discovery order.
    pub fn pairs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.keys.iter().map(|&k| self.decode(k))
    }

    pub fn iter(&self) -> impl Iterator<Item = GenMap> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }

    /// Member keys in increasing order, for reporting.
    pub fn sorted_keys(&self) -> Vec<u64> {
        let mut v = self.keys.clone();
        v.sort_unstable();
        v
    }
}

/// The subgroup generated by `generators`, by breadth-first right
/// multiplication. Inverses come for free in a finite group.
pub fn closure(generators: &[GenMap], limit: usize) -> Result<AutSet, AutError> {
    let first = generators
        .first()
        .ok_or_else(|| AutError::Unsupported("empty generator list".into()))?;
    let group = *first.group();
    for (n, g) in generators.iter().enumerate() {
        if g.group() != &group || !g.is_automorphism().unwrap_or(false) {
            return Err(AutError::NotAutomorphism(n));
        }
    }
    let tables: Vec<ApplyTable> = generators.iter().map(ApplyTable::new).collect();
    let mut set = AutSet {
        group,
        generators: generators.to_vec(),
        keys: Vec::new(),
        index: FxHashMap::default(),
    };
    let id = set.key(group.gen_a(), group.gen_b());
    set.keys.push(id);
    set.index.insert(id, 0);
    let mut head = 0;
    while head < set.keys.len() {
        let (a, b) = set.decode(set.keys[head]);
        head += 1;
        for t in &tables {
            let key = set.key(t.apply(a), t.apply(b));
            if let std::collections::hash_map::Entry::Vacant(e) = set.index.entry(key) {
                if set.keys.len() >= limit {
                    return Err(AutError::LimitExceeded(limit));
                }
                e.insert(set.keys.len() as u32);
                set.keys.push(key);
            }
        }
    }
    Ok(set)
}

/// Level of f in the centrality filtration, from its image pair.
pub(crate) fn pair_level(g: &Group, a: Element, b: Element) -> u32 {
    let da = g.mul(a, g.invert(g.gen_a()));
    let db = g.mul(b, g.invert(g.gen_b()));
    g.central_level(da).max(g.central_level(db))
}

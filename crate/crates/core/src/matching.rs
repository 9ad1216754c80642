//! Incremental bipartite matching by augmenting paths.
//!
//! Left vertices ("slots") are pushed and popped in stack order; each push
//! keeps every present slot matched or is rolled back. Right vertices are
//! arbitrary `usize` ids (hyperedge indices in practice).

use std::collections::{HashMap, HashSet};

#[derive(Debug, Default, Clone)]
pub struct SlotMatcher {
    allowed: Vec<Vec<usize>>,
    slot_to_right: Vec<usize>,
    right_to_slot: HashMap<usize, usize>,
}

impl SlotMatcher {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.allowed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.allowed.is_empty()
    }

    /// Adds a slot and tries to extend the matching to it. On failure the
    /// slot is discarded, the existing assignment is left untouched and
    /// `false` is returned.
    pub fn push(&mut self, allowed: Vec<usize>) -> bool {
        let slot = self.allowed.len();
        self.allowed.push(allowed);
        self.slot_to_right.push(usize::MAX);
        let mut visited = HashSet::new();
        if self.augment(slot, &mut visited) {
            true
        } else {
            self.allowed.pop();
            self.slot_to_right.pop();
            false
        }
    }

    pub fn pop(&mut self) {
        if let Some(r) = self.slot_to_right.pop() {
            self.right_to_slot.remove(&r);
        }
        self.allowed.pop();
    }

    fn augment(&mut self, slot: usize, visited: &mut HashSet<usize>) -> bool {
        for i in 0..self.allowed[slot].len() {
            let r = self.allowed[slot][i];
            if !visited.insert(r) {
                continue;
            }
            let free = match self.right_to_slot.get(&r) {
                None => true,
                Some(&other) => self.augment(other, visited),
            };
            if free {
                self.slot_to_right[slot] = r;
                self.right_to_slot.insert(r, slot);
                return true;
            }
        }
        false
    }

    /// Right vertex matched to each slot, in push order.
    pub fn assignment(&self) -> &[usize] {
        &self.slot_to_right
    }
}

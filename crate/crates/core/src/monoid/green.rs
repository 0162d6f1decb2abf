use std::collections::{BTreeSet, HashMap};

use super::{Element, Monoid};
use crate::graph::{component_ids, strongly_connected_components};
use crate::word::Letter;

/// Green's relations of a finite monoid.
///
/// `e R f` iff `eM = fM` iff `e` and `f` are mutually reachable in the
/// right Cayley graph; `L` uses the left graph and `J` their union.
#[derive(Clone, Debug)]
pub struct GreenClasses {
    pub r_classes: Vec<Vec<Element>>,
    pub l_classes: Vec<Vec<Element>>,
    pub j_classes: Vec<Vec<Element>>,
    pub h_classes: Vec<Vec<Element>>,
    r_of: Vec<usize>,
    l_of: Vec<usize>,
    j_of: Vec<usize>,
    h_of: Vec<usize>,
    // below[c] = J-classes strictly below class c
    below: Vec<BTreeSet<usize>>,
}

fn classes(adjacency: &[Vec<Element>]) -> (Vec<Vec<Element>>, Vec<usize>) {
    let comps = strongly_connected_components(adjacency);
    let ids = component_ids(adjacency.len(), &comps);
    (comps, ids)
}

impl GreenClasses {
    pub fn new(m: &Monoid) -> Self {
        let k = m.letters();
        let right: Vec<Vec<Element>> = (0..m.len())
            .map(|e| (0..k).map(|a| m.right_step(e, a as Letter)).collect())
            .collect();
        let left: Vec<Vec<Element>> = (0..m.len())
            .map(|e| (0..k).map(|a| m.left_step(e, a as Letter)).collect())
            .collect();
        let both: Vec<Vec<Element>> = right
            .iter()
            .zip(&left)
            .map(|(r, l)| r.iter().chain(l).copied().collect())
            .collect();
        let (r_classes, r_of) = classes(&right);
        let (l_classes, l_of) = classes(&left);
        let (j_classes, j_of) = classes(&both);

        let mut h_index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut h_classes: Vec<Vec<Element>> = Vec::new();
        let mut h_of = vec![0; m.len()];
        for e in 0..m.len() {
            let id = *h_index.entry((r_of[e], l_of[e])).or_insert_with(|| {
                h_classes.push(Vec::new());
                h_classes.len() - 1
            });
            h_classes[id].push(e);
            h_of[e] = id;
        }

        // Components come sinks first, so every class below `c` has a
        // smaller index and is complete when `c` is processed.
        let mut below: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); j_classes.len()];
        for c in 0..j_classes.len() {
            let mut acc = BTreeSet::new();
            for &e in &j_classes[c] {
                for &f in &both[e] {
                    let d = j_of[f];
                    if d != c {
                        acc.insert(d);
                        acc.extend(below[d].iter().copied());
                    }
                }
            }
            below[c] = acc;
        }

        GreenClasses {
            r_classes,
            l_classes,
            j_classes,
            h_classes,
            r_of,
            l_of,
            j_of,
            h_of,
            below,
        }
    }

    pub fn r_class_of(&self, e: Element) -> usize {
        self.r_of[e]
    }

    pub fn l_class_of(&self, e: Element) -> usize {
        self.l_of[e]
    }

    pub fn j_class_of(&self, e: Element) -> usize {
        self.j_of[e]
    }

    pub fn h_class_of(&self, e: Element) -> usize {
        self.h_of[e]
    }

    /// `J(e) ≤ J(f)`, i.e. `MeM ⊆ MfM`.
    pub fn j_leq(&self, e: Element, f: Element) -> bool {
        let (ce, cf) = (self.j_of[e], self.j_of[f]);
        ce == cf || self.below[cf].contains(&ce)
    }

    /// J-classes with nothing strictly below.
    pub fn minimal_j_classes(&self) -> Vec<usize> {
        (0..self.j_classes.len())
            .filter(|&c| self.below[c].is_empty())
            .collect()
    }

    pub fn is_j_minimal(&self, e: Element) -> bool {
        self.below[self.j_of[e]].is_empty()
    }
}

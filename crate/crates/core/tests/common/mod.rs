//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use coxpop::{Element, GroupContext, DEFAULT_BUDGET};
use std::collections::{HashMap, VecDeque};

pub fn ctx(name: &str) -> GroupContext {
    GroupContext::new(name.parse().unwrap()).unwrap()
}

/// Whole group with reflection lengths found by breadth-first search in the
/// Cayley graph generated by all reflections.
pub struct Oracle {
    pub elements: Vec<Element>,
    pub index: HashMap<Element, usize>,
    pub length: Vec<usize>,
}

impl Oracle {
    pub fn new(ctx: &GroupContext) -> Oracle {
        let elements = ctx.enumerate(DEFAULT_BUDGET).unwrap().elements().to_vec();
        let index: HashMap<Element, usize> = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut length = vec![usize::MAX; elements.len()];
        let start = index[ctx.identity()];
        length[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for t in ctx.reflections() {
                let j = index[&elements[i].compose(t)];
                if length[j] == usize::MAX {
                    length[j] = length[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        Oracle { elements, index, length }
    }

    pub fn len_of(&self, w: &Element) -> usize {
        self.length[self.index[w]]
    }

    /// `v <=_T w` from reflection lengths.
    pub fn leq(&self, v: &Element, w: &Element) -> bool {
        self.len_of(v) + self.len_of(&v.inverse().compose(w)) == self.len_of(w)
    }

    /// The interval `[e, c]`.
    pub fn noncrossing(&self, c: &Element) -> Vec<Element> {
        self.elements.iter().filter(|v| self.leq(v, c)).cloned().collect()
    }

    /// Smallest element of `nc` lying above every reflection below `w`.
    pub fn project(&self, ctx: &GroupContext, nc: &[Element], w: &Element) -> Element {
        let below: Vec<&Element> = ctx.reflections().iter().filter(|t| self.leq(t, w)).collect();
        let uppers: Vec<&Element> = nc.iter().filter(|u| below.iter().all(|t| self.leq(t, u))).collect();
        let least: Vec<&&Element> = uppers.iter().filter(|u| uppers.iter().all(|x| self.leq(u, x))).collect();
        assert_eq!(least.len(), 1, "join must exist and be unique");
        (*least[0]).clone()
    }
}

/// Set partitions of `1..=n` as block labels (restricted growth strings).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn go(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == rgs.len() {
            out.push(rgs.clone());
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            go(i + 1, max.max(b), rgs, out);
        }
    }
    if n > 0 {
        go(1, 0, &mut rgs, &mut out);
    }
    out
}

/// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
pub fn is_noncrossing_labels(labels: &[usize]) -> bool {
    let n = labels.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if labels[a] == labels[c] && labels[b] == labels[d] && labels[a] != labels[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Finest noncrossing partition of `1..=n` coarser than `blocks`, as sorted
/// blocks of size at least two.
pub fn noncrossing_closure_brute(n: usize, blocks: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let coarser = |labels: &[usize]| {
        blocks.iter().all(|b| b.windows(2).all(|p| labels[p[0] as usize - 1] == labels[p[1] as usize - 1]))
    };
    let best = set_partitions(n)
        .into_iter()
        .filter(|l| is_noncrossing_labels(l) && coarser(l))
        .max_by_key(|l| l.iter().max().copied().unwrap_or(0))
        .unwrap();
    normalise_labels(&best)
}

pub fn normalise_labels(labels: &[usize]) -> Vec<Vec<i32>> {
    let mut blocks: Vec<Vec<i32>> = Vec::new();
    for b in 0..=labels.iter().copied().max().unwrap_or(0) {
        let block: Vec<i32> = (0..labels.len()).filter(|&i| labels[i] == b).map(|i| i as i32 + 1).collect();
        if block.len() > 1 {
            blocks.push(block);
        }
    }
    blocks.sort();
    blocks
}

pub fn normalise_blocks(blocks: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = blocks
        .iter()
        .filter(|b| b.len() > 1)
        .map(|b| {
            let mut b = b.clone();
            b.sort();
            b
        })
        .collect();
    out.sort();
    out
}

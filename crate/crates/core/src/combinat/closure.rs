//! Noncrossing set partitions on a circle and the closure of an arbitrary
//! set partition to the finest noncrossing partition above it.
//!
//! * Type A: points `1, ..., n` clockwise on a circle.
//! * Type B: points `-1, ..., -n, 1, ..., n` clockwise; partitions are
//!   closed under negation.
//! * Type D: points `-1, ..., -(n-1), 1, ..., n-1` clockwise and both `±n`
//!   at the centre. Two blocks conflict when the relative interior of the
//!   convex hull of one meets the hull of the other; a block equal to its
//!   own negation (the zero block) must contain `±n`.
//!
//! The closure merges conflicting blocks (with their negatives) in a
//! union-find structure until nothing conflicts. Every merge is forced, so
//! the result does not depend on the order of merges.

use super::signed::SignedPerm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    A,
    B,
    D,
}

/// Circle geometry for one kind and size.
#[derive(Clone, Copy, Debug)]
pub struct Circle {
    pub kind: Kind,
    pub n: usize,
}

impl Circle {
    pub fn new(kind: Kind, n: usize) -> Self {
        Circle { kind, n }
    }

    /// Number of points on the circle.
    pub fn size(&self) -> usize {
        match self.kind {
            Kind::A => self.n,
            Kind::B => 2 * self.n,
            Kind::D => 2 * self.n - 2,
        }
    }

    /// Clockwise position of an entry, `None` for the centre (`±n` in type D).
    pub fn position(&self, x: i32) -> Option<usize> {
        let n = self.n as i32;
        let a = x.unsigned_abs() as usize;
        match self.kind {
            Kind::A => Some(a - 1),
            Kind::B => Some(if x < 0 { a - 1 } else { self.n + a - 1 }),
            Kind::D => {
                if x.abs() == n {
                    None
                } else if x < 0 {
                    Some(a - 1)
                } else {
                    Some(self.n - 1 + a - 1)
                }
            }
        }
    }

    /// The entry at a clockwise position.
    pub fn entry(&self, p: usize) -> i32 {
        match self.kind {
            Kind::A => p as i32 + 1,
            Kind::B => {
                if p < self.n { -(p as i32 + 1) } else { (p - self.n) as i32 + 1 }
            }
            Kind::D => {
                let m = self.n - 1;
                if p < m { -(p as i32 + 1) } else { (p - m) as i32 + 1 }
            }
        }
    }

    /// The ground set: `[n]` for type A, `±[n]` otherwise.
    pub fn ground_set(&self) -> Vec<i32> {
        let n = self.n as i32;
        match self.kind {
            Kind::A => (1..=n).collect(),
            _ => (1..=n).flat_map(|x| [-x, x]).collect(),
        }
    }

    fn slot(&self, x: i32) -> usize {
        if x > 0 { x as usize - 1 } else { self.n + x.unsigned_abs() as usize - 1 }
    }

    fn slots(&self) -> usize {
        match self.kind {
            Kind::A => self.n,
            _ => 2 * self.n,
        }
    }
}

/// Whether two disjoint position sets alternate around a circle of `m` points.
pub fn interleave(m: usize, xs: &[usize], ys: &[usize]) -> bool {
    if xs.len() < 2 || ys.len() < 2 {
        return false;
    }
    let mut label = vec![0u8; m];
    for &p in xs {
        label[p] = 1;
    }
    for &p in ys {
        label[p] = 2;
    }
    let seq: Vec<u8> = label.into_iter().filter(|&l| l != 0).collect();
    let runs = (0..seq.len()).filter(|&i| seq[i] != seq[(i + seq.len() - 1) % seq.len()]).count();
    runs >= 4
}

/// Cyclic gaps of a sorted, nonempty position list: `(start, length)` where
/// the gap runs clockwise from `start` to the next point.
fn gaps(m: usize, sorted: &[usize]) -> Vec<(usize, usize)> {
    let k = sorted.len();
    (0..k)
        .map(|i| {
            let a = sorted[i];
            let b = sorted[(i + 1) % k];
            let len = if k == 1 { m } else { (b + m - a) % m };
            (a, len)
        })
        .collect()
}

/// Index of the gap strictly containing position `x` (not itself a point).
fn gap_containing(m: usize, sorted: &[usize], x: usize) -> usize {
    let g = gaps(m, sorted);
    g.iter()
        .position(|&(a, len)| {
            let d = (x + m - a) % m;
            d > 0 && d < len
        })
        .expect("position not in the set lies in some gap")
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(k: usize) -> Self {
        UnionFind { parent: (0..k).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// One block of a partition with its circle geometry.
struct BlockInfo {
    members: Vec<i32>,
    /// Sorted circle positions.
    points: Vec<usize>,
    /// Contains `n` or `-n` (type D only).
    center: bool,
    zero: bool,
}

fn block_infos(circle: &Circle, blocks: &[Vec<i32>]) -> Vec<BlockInfo> {
    blocks
        .iter()
        .map(|b| {
            let mut points: Vec<usize> = b.iter().filter_map(|&x| circle.position(x)).collect();
            points.sort_unstable();
            let center = b.iter().any(|&x| circle.position(x).is_none());
            let zero = circle.kind != Kind::A && b.iter().any(|&x| b.contains(&-x));
            BlockInfo { members: b.clone(), points, center, zero }
        })
        .collect()
}

/// Type D: do a block with centre and circle points `fan` and a block of
/// circle points `q` (no centre) conflict? `fan` must lie in an open
/// half-circle.
fn fan_conflict(m: usize, fan: &[usize], q: &[usize]) -> bool {
    let half = m / 2;
    let long_gap_holding = |pts: &[usize], x: usize| gaps(m, pts)[gap_containing(m, pts, x)].1 > half;
    if fan.is_empty() {
        // The hull of the block is the centre alone.
        return !gaps(m, q).iter().any(|&(_, len)| len > half);
    }
    let fg = gaps(m, fan);
    let first = gap_containing(m, fan, q[0]);
    if q.iter().any(|&p| gap_containing(m, fan, p) != first) {
        return true;
    }
    if fg[first].1 <= half {
        // q sits in the cap beyond a chord of the fan.
        return false;
    }
    !long_gap_holding(q, fan[0])
}

fn conflict(circle: &Circle, x: &BlockInfo, y: &BlockInfo) -> bool {
    let m = circle.size();
    // Only type D has a centre; symmetric blocks of type B are ordinary
    // polygons on the circle.
    let special = |b: &BlockInfo| circle.kind == Kind::D && (b.center || b.zero);
    match (special(x), special(y)) {
        (false, false) => interleave(m, &x.points, &y.points),
        (true, true) => false,
        (true, false) | (false, true) => {
            let (c, p) = if special(x) { (x, y) } else { (y, x) };
            if c.zero {
                interleave(m, &c.points, &p.points)
            } else {
                fan_conflict(m, &c.points, &p.points)
            }
        }
    }
}

/// The finest noncrossing partition (of the given kind) coarser than
/// `blocks`. Input blocks must partition the ground set and, for B and D,
/// be closed under negation. Output blocks are sorted with sorted members.
pub fn nc_closure(circle: &Circle, blocks: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let slots = circle.slots();
    let mut uf = UnionFind::new(slots);
    for b in blocks {
        for w in b.windows(2) {
            uf.union(circle.slot(w[0]), circle.slot(w[1]));
        }
    }
    let n = circle.n as i32;
    let signed = circle.kind != Kind::A;
    loop {
        let current = collect_blocks(circle, &mut uf);
        let infos = block_infos(circle, &current);
        let mut merges: Vec<(i32, i32)> = Vec::new();
        for b in &infos {
            if circle.kind == Kind::D {
                if b.zero && !b.center {
                    merges.push((b.members[0], n));
                    merges.push((b.members[0], -n));
                }
                if b.center && !b.zero && !gaps(circle.size(), &b.points).iter().any(|&(_, l)| l > circle.size() / 2) && !b.points.is_empty() {
                    // The hull swallows the centre, which also belongs to the
                    // negated block.
                    merges.push((b.members[0], -b.members[0]));
                }
            }
        }
        if merges.is_empty() {
            'pairs: for i in 0..infos.len() {
                for j in i + 1..infos.len() {
                    if conflict(circle, &infos[i], &infos[j]) {
                        merges.push((infos[i].members[0], infos[j].members[0]));
                        break 'pairs;
                    }
                }
            }
        }
        if merges.is_empty() {
            return current;
        }
        for (a, b) in merges {
            uf.union(circle.slot(a), circle.slot(b));
            if signed {
                uf.union(circle.slot(-a), circle.slot(-b));
            }
        }
    }
}

fn collect_blocks(circle: &Circle, uf: &mut UnionFind) -> Vec<Vec<i32>> {
    let mut by_root: Vec<Vec<i32>> = vec![Vec::new(); circle.slots()];
    for x in circle.ground_set() {
        let r = uf.find(circle.slot(x));
        by_root[r].push(x);
    }
    let mut out: Vec<Vec<i32>> = by_root.into_iter().filter(|b| !b.is_empty()).collect();
    for b in out.iter_mut() {
        b.sort_unstable();
    }
    out.sort();
    out
}

/// Whether a negation-closed partition is noncrossing for its kind
/// (including the type D requirements on zero blocks).
pub fn is_noncrossing(circle: &Circle, blocks: &[Vec<i32>]) -> bool {
    let infos = block_infos(circle, blocks);
    let m = circle.size();
    if circle.kind == Kind::D {
        let n = circle.n as i32;
        let zeros = infos.iter().filter(|b| b.zero).count();
        if zeros > 1 {
            return false;
        }
        for b in &infos {
            if b.zero && (!b.center || b.points.is_empty()) {
                return false;
            }
            if b.members.len() == 2 && b.members.contains(&n) && b.members.contains(&-n) {
                return false;
            }
            if b.center && !b.zero && !b.points.is_empty() && !gaps(m, &b.points).iter().any(|&(_, l)| l > m / 2) {
                return false;
            }
        }
    }
    for i in 0..infos.len() {
        for j in i + 1..infos.len() {
            if conflict(circle, &infos[i], &infos[j]) {
                return false;
            }
        }
    }
    true
}

/// The noncrossing partition element attached to a noncrossing set
/// partition: every block becomes the cycle reading its entries clockwise
/// around the boundary of its convex hull. In type D a block through the
/// centre reads its circle points clockwise starting after its long gap and
/// ends at the centre; the zero block gives `(-n n)` and the clockwise cycle
/// of its circle points.
pub fn partition_to_perm(circle: &Circle, blocks: &[Vec<i32>]) -> SignedPerm {
    let m = circle.size();
    let n = circle.n as i32;
    let mut cycles: Vec<Vec<i32>> = Vec::new();
    for b in block_infos(circle, blocks) {
        if b.members.len() < 2 {
            continue;
        }
        let mut cyc: Vec<i32> = b.points.iter().map(|&p| circle.entry(p)).collect();
        if b.center && b.zero {
            cycles.push(vec![-n, n]);
        } else if b.center {
            let g = gaps(m, &b.points);
            let (long, _) = g.iter().enumerate().max_by_key(|(_, &(_, len))| len).expect("nonempty");
            let len = cyc.len();
            cyc.rotate_left((long + 1) % len);
            let centre = *b.members.iter().find(|x| x.abs() == n).expect("centre entry");
            cyc.push(centre);
        }
        if cyc.len() > 1 {
            cycles.push(cyc);
        }
    }
    SignedPerm::from_cycles(circle.n, &cycles).expect("blocks form a signed permutation")
}

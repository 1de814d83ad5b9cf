//! Depth-first traversal of the semigroup tree.
//!
//! Each node carries, for every `x` in a fixed window, the number of
//! unordered pairs `{a, b}` of members with `a + b = x` (the pair `{0, x}`
//! included). Membership is `count > 0` and minimal generators are exactly
//! the members with count 1. Removing an effective generator `λ` only
//! touches entries at or above `λ`: every `x ≥ λ` with `x - λ` a member loses
//! one pair.
//!
//! The window is `[0, 3·g_max + 1]`. A genus-`g` semigroup has `F ≤ 2g - 1`
//! and `m ≤ g + 1`, so all of its minimal generators (at most `F + m`) fit.

mod census;

use rayon::prelude::*;

pub use census::{CensusOptions, CensusTable, CountBy, StrongCensus};

use crate::error::{Error, Result};
use crate::semigroup::{GeneratorTag, NumericalSemigroup, Strength};

/// Largest genus the `u8` pair counters can hold: the root's count at `x` is
/// `x/2 + 1`, which must stay below 256 across the window.
pub const MAX_GENUS: u32 = 160;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Descent {
    Root,
    Strong,
    Weak,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub max_genus: u32,
    /// Prune every subtree whose root has a larger Frobenius number. Along a
    /// tree path the Frobenius number strictly increases, so nothing below is
    /// lost.
    pub max_frobenius: Option<u32>,
    pub split_depth: u32,
    pub workers: usize,
}

impl EnumConfig {
    pub fn new(max_genus: u32) -> Self {
        Self { max_genus, max_frobenius: None, split_depth: 0, workers: 1 }
    }

    /// Every semigroup with Frobenius number at most `max_frobenius`
    /// (genus never exceeds the Frobenius number).
    pub fn by_frobenius(max_frobenius: u32) -> Self {
        Self {
            max_genus: max_frobenius,
            max_frobenius: Some(max_frobenius),
            split_depth: 0,
            workers: 1,
        }
    }

    pub fn split(mut self, split_depth: u32, workers: usize) -> Self {
        self.split_depth = split_depth;
        self.workers = workers.max(1);
        self
    }

    pub fn window(&self) -> usize {
        3 * self.max_genus as usize + 2
    }

    fn validate(&self) -> Result<()> {
        if self.max_genus > MAX_GENUS {
            return Err(Error::WindowOverflow { limit: 3 * MAX_GENUS as usize + 2 });
        }
        if self.split_depth > self.max_genus {
            return Err(Error::OutOfRange { what: "split depth", value: i64::from(self.split_depth) });
        }
        Ok(())
    }
}

/// Aggregates per-node observations. Implementations must be commutative
/// monoids under `merge`, with `fork` producing the identity, so that
/// splitting the tree across workers cannot change the result.
pub trait Collector: Send + Sync + Sized {
    fn fork(&self) -> Self;
    fn visit(&mut self, frame: &TreeFrame<'_>);
    fn merge(&mut self, other: Self);
}

impl<A: Collector, B: Collector> Collector for (A, B) {
    fn fork(&self) -> Self {
        (self.0.fork(), self.1.fork())
    }
    fn visit(&mut self, frame: &TreeFrame<'_>) {
        self.0.visit(frame);
        self.1.visit(frame);
    }
    fn merge(&mut self, other: Self) {
        self.0.merge(other.0);
        self.1.merge(other.1);
    }
}

impl<A: Collector, B: Collector, C: Collector> Collector for (A, B, C) {
    fn fork(&self) -> Self {
        (self.0.fork(), self.1.fork(), self.2.fork())
    }
    fn visit(&mut self, frame: &TreeFrame<'_>) {
        self.0.visit(frame);
        self.1.visit(frame);
        self.2.visit(frame);
    }
    fn merge(&mut self, other: Self) {
        self.0.merge(other.0);
        self.1.merge(other.1);
        self.2.merge(other.2);
    }
}

#[derive(Clone, Debug)]
struct Node {
    decs: Vec<u8>,
    genus: u32,
    frobenius: i32,
    multiplicity: u32,
}

impl Node {
    fn root(window: usize) -> Self {
        Self {
            decs: (0..window).map(|x| (x / 2 + 1) as u8).collect(),
            genus: 0,
            frobenius: -1,
            multiplicity: 1,
        }
    }

    fn contains(&self, x: usize) -> bool {
        x >= self.decs.len() || self.decs[x] > 0
    }

    /// Pair count at `x`, scanning past the window when needed.
    fn decompositions(&self, x: usize) -> u32 {
        match self.decs.get(x) {
            Some(&d) => u32::from(d),
            None => (0..=x / 2).filter(|&a| self.contains(a) && self.contains(x - a)).count() as u32,
        }
    }

    fn fill_effective(&self, out: &mut Vec<GeneratorTag>) {
        out.clear();
        let lo = (self.frobenius + 1).max(1) as usize;
        let hi = (self.frobenius + 1) as usize + self.multiplicity as usize;
        for x in lo..=hi {
            if self.decs[x] == 1 {
                // m + λ keeps exactly one nonzero pair once λ is gone
                let strength = if self.decompositions(x + self.multiplicity as usize) == 2 {
                    Strength::Strong
                } else {
                    Strength::Weak
                };
                out.push(GeneratorTag { value: x as u32, strength });
            }
        }
    }

    fn child_into(&self, lambda: u32, child: &mut Node) {
        let l = lambda as usize;
        child.decs.copy_from_slice(&self.decs);
        for (c, &p) in child.decs[l..].iter_mut().zip(&self.decs) {
            *c -= u8::from(p > 0);
        }
        child.genus = self.genus + 1;
        child.frobenius = lambda as i32;
        child.multiplicity = if lambda == self.multiplicity { lambda + 1 } else { self.multiplicity };
    }
}

/// Read-only view of one tree node handed to collectors.
pub struct TreeFrame<'a> {
    node: &'a Node,
    effective: &'a [GeneratorTag],
    parent_removed: Option<u32>,
    descent: Descent,
}

impl<'a> TreeFrame<'a> {
    pub fn genus(&self) -> u32 {
        self.node.genus
    }

    pub fn frobenius(&self) -> i32 {
        self.node.frobenius
    }

    pub fn multiplicity(&self) -> u32 {
        self.node.multiplicity
    }

    /// Effective generators in increasing order, tagged strong or weak.
    pub fn effective(&self) -> &'a [GeneratorTag] {
        self.effective
    }

    pub fn efficacy(&self) -> usize {
        self.effective.len()
    }

    pub fn parent_removed(&self) -> Option<u32> {
        self.parent_removed
    }

    pub fn descent(&self) -> Descent {
        self.descent
    }

    /// The root counts as strongly descended.
    pub fn is_strongly_descended(&self) -> bool {
        self.descent != Descent::Weak
    }

    pub fn contains(&self, x: u64) -> bool {
        usize::try_from(x).map_or(true, |x| self.node.contains(x))
    }

    pub fn min_generators(&self) -> impl Iterator<Item = u32> + '_ {
        self.node
            .decs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &d)| d == 1)
            .map(|(x, _)| x as u32)
    }

    pub fn is_min_generator(&self, x: u64) -> bool {
        x > 0 && usize::try_from(x).ok().and_then(|i| self.node.decs.get(i)) == Some(&1)
    }

    pub fn embedding_dimension(&self) -> usize {
        self.node.decs[1..].iter().filter(|&&d| d == 1).count()
    }

    pub fn gaps(&self) -> impl Iterator<Item = u32> + '_ {
        let top = (self.node.frobenius + 1) as usize;
        self.node.decs[..top]
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(x, _)| x as u32)
    }

    /// `|S ∩ [0, F]|`.
    pub fn small_element_count(&self) -> u32 {
        (self.node.frobenius + 1) as u32 - self.node.genus
    }

    /// Gap set as a bit mask while the Frobenius number stays below 128.
    pub fn gap_mask(&self) -> Option<u128> {
        (self.node.frobenius < 128).then(|| self.gaps().fold(0u128, |acc, l| acc | 1 << l))
    }

    pub fn to_semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_closed_table(self.node.decs.iter().map(|&d| d > 0).collect())
    }
}

/// Strength of the edge obtained by removing `lambda` from `parent`.
pub fn descent_strength(parent: &TreeFrame<'_>, lambda: u32) -> Result<Strength> {
    parent
        .effective
        .iter()
        .find(|t| t.value == lambda)
        .map(|t| t.strength)
        .ok_or(Error::NotEffective(u64::from(lambda)))
}

struct FrontierItem {
    node: Node,
    parent_removed: Option<u32>,
    descent: Descent,
}

struct Walker {
    max_genus: u32,
    max_frobenius: Option<u32>,
    stop_genus: Option<u32>,
    stack: Vec<Node>,
    tags: Vec<Vec<GeneratorTag>>,
    frontier: Vec<FrontierItem>,
}

impl Walker {
    fn new(config: &EnumConfig, root: Node, stop_genus: Option<u32>) -> Self {
        let levels = (config.max_genus - root.genus) as usize + 1;
        let mut stack = vec![root.clone(); levels];
        stack[0] = root;
        Self {
            max_genus: config.max_genus,
            max_frobenius: config.max_frobenius,
            stop_genus,
            stack,
            tags: vec![Vec::new(); levels],
            frontier: Vec::new(),
        }
    }

    fn walk<C: Collector>(&mut self, depth: usize, parent_removed: Option<u32>, descent: Descent, sink: &mut C) {
        let mut tags = std::mem::take(&mut self.tags[depth]);
        let node = &self.stack[depth];
        node.fill_effective(&mut tags);
        if self.stop_genus == Some(node.genus) {
            self.frontier.push(FrontierItem { node: node.clone(), parent_removed, descent });
            self.tags[depth] = tags;
            return;
        }
        sink.visit(&TreeFrame { node, effective: &tags, parent_removed, descent });
        if node.genus < self.max_genus {
            for tag in &tags {
                if self.max_frobenius.is_some_and(|f| tag.value > f) {
                    break;
                }
                let (parents, children) = self.stack.split_at_mut(depth + 1);
                parents[depth].child_into(tag.value, &mut children[0]);
                let d = if tag.strength == Strength::Strong { Descent::Strong } else { Descent::Weak };
                self.walk(depth + 1, Some(tag.value), d, sink);
            }
        }
        self.tags[depth] = tags;
    }
}

/// Visits every semigroup of genus at most `config.max_genus` (and Frobenius
/// number at most `config.max_frobenius`, when set) exactly once, children in
/// increasing order of the removed generator.
///
/// With `split_depth > 0` the nodes at genus `split_depth` are collected
/// first and their subtrees are walked on `workers` threads, each into its
/// own fork of `collector`.
pub fn enumerate<C: Collector>(config: &EnumConfig, collector: C) -> Result<C> {
    config.validate()?;
    let root = Node::root(config.window());
    let mut main = collector;
    if config.split_depth == 0 {
        Walker::new(config, root, None).walk(0, None, Descent::Root, &mut main);
        return Ok(main);
    }
    let mut head = Walker::new(config, root, Some(config.split_depth));
    head.walk(0, None, Descent::Root, &mut main);
    let frontier = std::mem::take(&mut head.frontier);
    let proto = main.fork();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .expect("failed to build worker pool");
    let rest = pool.install(|| {
        frontier
            .into_par_iter()
            .fold(
                || proto.fork(),
                |mut acc, item| {
                    Walker::new(config, item.node, None).walk(0, item.parent_removed, item.descent, &mut acc);
                    acc
                },
            )
            .reduce(|| proto.fork(), |mut a, b| {
                a.merge(b);
                a
            })
    });
    main.merge(rest);
    Ok(main)
}

/// `ns(F)` for `0 ≤ F ≤ max_frobenius`, indexed by `F`.
pub fn ns_by_frobenius(max_frobenius: u32, split_depth: u32, workers: usize) -> Result<Vec<u64>> {
    let config = EnumConfig::by_frobenius(max_frobenius).split(split_depth.min(max_frobenius), workers);
    let census = enumerate(&config, CensusTable::new(max_frobenius, CensusOptions::default()))?;
    Ok((0..=max_frobenius).map(|f| census.ns(f)).collect())
}

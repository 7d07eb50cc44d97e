//! Buchberger's improved algorithm producing reduced Gröbner bases.
//!
//! The structure follows the classic "improved" formulation: input
//! polynomials are first mutually reduced (`reduce_all`), then new basis
//! members are paired with the existing ones and the whole basis is
//! inter-reduced (`new_basis`). Critical pairs are taken by the normal
//! strategy and filtered by the coprime criterion (on insertion) and the
//! chain criterion (on selection).
//!
//! Inter-reduction replaces basis members by their fully reduced forms.
//! Pending pairs of a replaced member are carried over to its replacement;
//! [`EngineOptions::newbasis_pair_update`] switches that off so tests can
//! show the carry-over is required for a correct basis.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::coeff::Coeff;
use crate::corpus::PolySystem;
use crate::error::{AlgebraError, Result};
use crate::poly::Polynomial;
use crate::powerprod::{MonomialOrder, Term};

/// Switches for the engine. The default is the full algorithm.
#[derive(Debug, Clone, Copy)]
pub struct EngineOptions {
    pub coprime_criterion: bool,
    pub chain_criterion: bool,
    /// Carry pending pairs over to polynomials rewritten by inter-reduction.
    /// Only tests should turn this off.
    pub newbasis_pair_update: bool,
    pub deadline: Option<Instant>,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            coprime_criterion: true,
            chain_criterion: true,
            newbasis_pair_update: true,
            deadline: None,
        }
    }
}

impl EngineOptions {
    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.deadline = Some(Instant::now() + timeout);
        self
    }
}

/// Counters describing one computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PairStats {
    /// Pairs created (including those dropped by the coprime criterion).
    pub created: usize,
    /// Pairs taken from the pending set.
    pub selected: usize,
    pub skipped_coprime: usize,
    pub skipped_chain: usize,
    pub zero_reductions: usize,
    /// S-polynomials whose normal form was nonzero.
    pub new_polynomials: usize,
    /// Basis members rewritten by inter-reduction.
    pub rewritten: usize,
    /// Pending pairs discarded because their member was rewritten and the
    /// pair update was disabled.
    pub stale_pairs_dropped: usize,
}

/// A pending S-polynomial between basis slots `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CriticalPair<T> {
    pub i: usize,
    pub j: usize,
    pub lcm: T,
}

#[derive(Debug, Clone)]
pub struct GroebnerResult<T, C> {
    /// Monic, reduced, sorted by ascending leading power product.
    pub basis: Vec<Polynomial<T, C>>,
    pub stats: PairStats,
    pub duration: Duration,
}

/// True when the leading power products share no variable, in which case the
/// S-polynomial always reduces to zero.
pub fn criterion_coprime<T: Term>(lpp_i: &T, lpp_j: &T) -> bool {
    lpp_i.is_coprime(lpp_j)
}

/// The chain criterion: the pair may be skipped when some other basis member
/// `k` has a leading power product dividing the pair's lcm and neither
/// `(i, k)` nor `(k, j)` is still pending.
///
/// `basis` lists `(slot, leading power product)` of the current members and
/// `pending` holds pending pairs as `(min, max)` slot tuples.
pub fn criterion_chain<'a, T: Term>(
    pair: &CriticalPair<T>,
    pending: &HashSet<(usize, usize)>,
    basis: impl IntoIterator<Item = (usize, &'a T)>,
) -> bool {
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    basis.into_iter().any(|(k, lpp)| {
        k != pair.i
            && k != pair.j
            && lpp.divides(&pair.lcm)
            && !pending.contains(&key(pair.i, k))
            && !pending.contains(&key(k, pair.j))
    })
}

struct Engine<T, C> {
    order: MonomialOrder,
    options: EngineOptions,
    slots: Vec<Option<Polynomial<T, C>>>,
    /// Members added since the last `new_basis`.
    fresh: Vec<usize>,
    pairs: Vec<CriticalPair<T>>,
    pending: HashSet<(usize, usize)>,
    stats: PairStats,
    steps: u64,
}

impl<T: Term, C: Coeff> Engine<T, C> {
    fn new(order: MonomialOrder, options: EngineOptions) -> Self {
        Engine {
            order,
            options,
            slots: Vec::new(),
            fresh: Vec::new(),
            pairs: Vec::new(),
            pending: HashSet::new(),
            stats: PairStats::default(),
            steps: 0,
        }
    }

    fn check_deadline(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps.is_multiple_of(8) {
            if let Some(deadline) = self.options.deadline {
                if Instant::now() >= deadline {
                    return Err(AlgebraError::Timeout);
                }
            }
        }
        Ok(())
    }

    fn active(&self) -> impl Iterator<Item = (usize, &Polynomial<T, C>)> {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.as_ref().map(|p| (i, p)))
    }

    fn normal_form(
        &mut self,
        p: &Polynomial<T, C>,
        skip: Option<usize>,
    ) -> Result<Polynomial<T, C>> {
        let divisors: Vec<&Polynomial<T, C>> = self
            .slots
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip)
            .filter_map(|(_, p)| p.as_ref())
            .collect();
        let deadline = self.options.deadline;
        let mut steps = self.steps;
        let result = p.normal_form_with(&divisors, &mut || {
            steps += 1;
            match deadline {
                Some(d) if steps.is_multiple_of(8) && Instant::now() >= d => Err(AlgebraError::Timeout),
                _ => Ok(()),
            }
        });
        self.steps = steps;
        result
    }

    fn insert(&mut self, p: Polynomial<T, C>) -> usize {
        self.slots.push(Some(p));
        let id = self.slots.len() - 1;
        self.fresh.push(id);
        id
    }

    /// Takes out every member whose leading power product is a multiple of
    /// `lpp`, dropping their pending pairs.
    fn remove_multiples(&mut self, lpp: &T) -> Vec<Polynomial<T, C>> {
        let ids: Vec<usize> = self
            .active()
            .filter(|(_, p)| lpp.divides(p.lpp()))
            .map(|(i, _)| i)
            .collect();
        let mut out = Vec::with_capacity(ids.len());
        for id in ids {
            out.push(self.slots[id].take().expect("active"));
            self.fresh.retain(|&f| f != id);
            self.drop_pairs_of(id);
        }
        out
    }

    fn drop_pairs_of(&mut self, id: usize) -> usize {
        let before = self.pairs.len();
        self.pairs.retain(|p| p.i != id && p.j != id);
        self.pending.retain(|&(a, b)| a != id && b != id);
        before - self.pairs.len()
    }

    /// Mutually reduces the queued polynomials against the basis, adding
    /// the nonzero results as fresh members.
    ///
    /// The queued polynomial with the smallest leading power product goes
    /// first. Taking them in arrival order lets a chain of evictions run like
    /// a remainder sequence, and coefficients grow by orders of magnitude.
    fn reduce_all(&mut self, mut queue: Vec<Polynomial<T, C>>) -> Result<()> {
        let order = self.order;
        while let Some(k) =
            (0..queue.len()).min_by(|&a, &b| queue[a].lpp().compare(queue[b].lpp(), order))
        {
            let h = queue.swap_remove(k);
            let h = self.normal_form(&h, None)?;
            if h.is_zero() {
                continue;
            }
            let h = h.make_monic()?;
            queue.extend(self.remove_multiples(h.lpp()));
            self.insert(h);
        }
        Ok(())
    }

    /// Creates the pairs between slot `new` and every earlier member.
    fn update_pairs(&mut self, new: usize) -> Result<()> {
        let lpp_new = self.slots[new].as_ref().expect("active").lpp().clone();
        let others: Vec<(usize, T)> = self
            .active()
            .filter(|(k, _)| *k < new)
            .map(|(k, p)| (k, p.lpp().clone()))
            .collect();
        for (k, lpp_k) in others {
            self.stats.created += 1;
            if self.options.coprime_criterion && criterion_coprime(&lpp_k, &lpp_new) {
                self.stats.skipped_coprime += 1;
                continue;
            }
            let lcm = lpp_k.lcm(&lpp_new)?;
            self.pairs.push(CriticalPair { i: k, j: new, lcm });
            self.pending.insert((k, new));
        }
        Ok(())
    }

    /// Pairs up the fresh members, then fully inter-reduces the basis.
    fn new_basis(&mut self) -> Result<()> {
        let mut fresh = std::mem::take(&mut self.fresh);
        fresh.sort_unstable();
        for id in fresh {
            self.update_pairs(id)?;
        }
        self.inter_reduce_slots()?;
        Ok(())
    }

    /// Replaces every member by its normal form modulo the others. Members
    /// have pairwise non-dividing leading power products here, so only tails
    /// change and each replacement keeps its slot.
    fn inter_reduce_slots(&mut self) -> Result<Vec<usize>> {
        let ids: Vec<usize> = self.active().map(|(i, _)| i).collect();
        let mut changed = Vec::new();
        for id in ids {
            let current = self.slots[id].take().expect("active");
            let reduced = self.normal_form(&current, Some(id))?;
            debug_assert!(!reduced.is_zero() && reduced.lpp() == current.lpp());
            if reduced != current {
                changed.push(id);
                self.stats.rewritten += 1;
            }
            self.slots[id] = Some(reduced);
        }
        if !self.options.newbasis_pair_update {
            for &id in &changed {
                self.stats.stale_pairs_dropped += self.drop_pairs_of(id);
            }
        }
        Ok(changed)
    }

    /// Normal strategy: smallest lcm, ties by slot indices.
    fn select_pair(&mut self) -> Option<CriticalPair<T>> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .compare(&b.lcm, order)
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        let pair = self.pairs.swap_remove(best);
        self.pending.remove(&(pair.i, pair.j));
        Some(pair)
    }

    fn run(&mut self, input: Vec<Polynomial<T, C>>) -> Result<()> {
        self.reduce_all(input.into_iter().filter(|p| !p.is_zero()).collect())?;
        self.new_basis()?;
        loop {
            while let Some(pair) = self.select_pair() {
                self.check_deadline()?;
                self.stats.selected += 1;
                if self.options.chain_criterion {
                    let lpps = self.active().map(|(k, p)| (k, p.lpp()));
                    if criterion_chain(&pair, &self.pending, lpps) {
                        self.stats.skipped_chain += 1;
                        continue;
                    }
                }
                let f = self.slots[pair.i]
                    .as_ref()
                    .expect("pair members are active");
                let g = self.slots[pair.j]
                    .as_ref()
                    .expect("pair members are active");
                let s = f.s_polynomial(g)?;
                let h = self.normal_form(&s, None)?;
                if h.is_zero() {
                    self.stats.zero_reductions += 1;
                    continue;
                }
                self.stats.new_polynomials += 1;
                let h = h.make_monic()?;
                let queue = self.remove_multiples(h.lpp());
                self.insert(h);
                self.reduce_all(queue)?;
                self.new_basis()?;
            }
            // No pairs left: stop once inter-reduction is a no-op.
            if self.inter_reduce_slots()?.is_empty() && self.pairs.is_empty() {
                return Ok(());
            }
        }
    }

    fn into_basis(self) -> Vec<Polynomial<T, C>> {
        let order = self.order;
        let mut basis: Vec<Polynomial<T, C>> = self.slots.into_iter().flatten().collect();
        basis.sort_by(|a, b| a.lpp().compare(b.lpp(), order));
        basis
    }
}

/// Computes the reduced Gröbner basis of `input` under `order`.
pub fn groebner_basis<T: Term, C: Coeff>(
    input: Vec<Polynomial<T, C>>,
    order: MonomialOrder,
    options: EngineOptions,
) -> Result<GroebnerResult<T, C>> {
    let start = Instant::now();
    let mut engine = Engine::new(order, options);
    engine.run(input)?;
    let stats = engine.stats;
    Ok(GroebnerResult {
        basis: engine.into_basis(),
        stats,
        duration: start.elapsed(),
    })
}

/// Reads `system` into the chosen representation and backend, then computes
/// its reduced Gröbner basis.
pub fn compute_groebner<T: Term, C: Coeff>(
    system: &PolySystem,
    order: MonomialOrder,
    options: EngineOptions,
) -> Result<GroebnerResult<T, C>> {
    groebner_basis(system.to_polynomials(order)?, order, options)
}

/// Drops members whose leading power product is divisible by another's,
/// then replaces each survivor by its monic normal form modulo the rest,
/// repeating until nothing changes.
pub fn inter_reduce<T: Term, C: Coeff>(
    basis: &[Polynomial<T, C>],
) -> Result<Vec<Polynomial<T, C>>> {
    let mut current: Vec<Polynomial<T, C>> =
        basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    loop {
        let mut next: Vec<Polynomial<T, C>> = Vec::with_capacity(current.len());
        for (i, p) in current.iter().enumerate() {
            let redundant = current
                .iter()
                .enumerate()
                .any(|(j, q)| j != i && q.lpp().divides(p.lpp()) && (q.lpp() != p.lpp() || j < i));
            if !redundant {
                next.push(p.clone());
            }
        }
        let mut changed = next.len() != current.len();
        for i in 0..next.len() {
            let others: Vec<&Polynomial<T, C>> = next
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q)
                .collect();
            let reduced = next[i].normal_form(&others)?;
            let reduced = if reduced.is_zero() {
                reduced
            } else {
                reduced.make_monic()?
            };
            if reduced != next[i] {
                changed = true;
            }
            next[i] = reduced;
        }
        next.retain(|p| !p.is_zero());
        current = next;
        if !changed {
            return Ok(current);
        }
    }
}

//! Order abstraction of valuations.
//!
//! Every connective clause compares values and reuses inputs, constants, or
//! complements; it never interpolates. Two valuations that induce the same
//! weak order on the relevant points (the constants of the query plus, per
//! variable, its value, its complement, or its two coordinates) therefore
//! give every formula the same relative position, and entailment over all
//! valuations reduces to entailment over the finitely many weak orders.
//!
//! A [`Universe`] fixes the point set; an [`OrderConfig`] is one weak order
//! over it, stored as a rank per point. Configurations are enumerated
//! lazily by inserting points one at a time into an anchored chain of
//! cells: the constants start the chain in their fixed order, and each new
//! point either joins an existing cell or opens a new cell in a gap between
//! neighbours. For the involutive language a variable and its complement
//! are placed together, mirror-symmetrically around the cell of 1/2, which
//! is exactly the constraint `v(-p) = 1 - v(p)` imposes on the order.
//!
//! [`OrderConfig::realize`] inverts the abstraction: anchored cells take
//! their constant's value and each run of free cells between anchors is
//! spaced evenly, which keeps complements exact in the mirror-symmetric
//! case.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;

use crate::semantics::{UnitRational, Valuation1, Valuation2, ValuePair};
use crate::syntax::Language;

use super::{DecisionError, Witness};

/// A tracked point of a universe, in user-facing form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolicPoint {
    /// A constant of the universe.
    Const(UnitRational),
    /// The value of a variable.
    Var(String),
    /// The complement `1 - v(p)` of a variable, tracked in the involutive
    /// language.
    Mirror(String),
    /// First coordinate of a pair variable.
    Coord1(String),
    /// Second coordinate of a pair variable.
    Coord2(String),
}

impl fmt::Display for SymbolicPoint {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicPoint::Const(c) => write!(out, "{c}"),
            SymbolicPoint::Var(p) => write!(out, "{p}"),
            SymbolicPoint::Mirror(p) => write!(out, "1-{p}"),
            SymbolicPoint::Coord1(p) => write!(out, "{p}.1"),
            SymbolicPoint::Coord2(p) => write!(out, "{p}.2"),
        }
    }
}

/// Internal point representation; indices refer into the universe tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Pt {
    Const(u8),
    Var(u8),
    Mirror(u8),
    Coord1(u8),
    Coord2(u8),
}

/// The fixed point set a decision runs over.
#[derive(Debug)]
pub struct Universe {
    lang: Language,
    vars: Vec<String>,
    consts: Vec<UnitRational>,
    points: Vec<Pt>,
    /// Index of the complement constant, position per constant. Kept for
    /// every language; only the involutive one reads it.
    mirror_of_const: Vec<u8>,
    c0: u8,
    c1: u8,
}

impl Universe {
    /// Builds the universe for a query: its variables plus the given
    /// constants, always including 0 and 1. The involutive language also
    /// closes the constants under complement and adds 1/2, keeping the
    /// anchored chain mirror-symmetric.
    pub fn new(
        lang: Language,
        vars: impl IntoIterator<Item = String>,
        extra_consts: &[UnitRational],
    ) -> Arc<Universe> {
        let vars: BTreeSet<String> = vars.into_iter().collect();
        let vars: Vec<String> = vars.into_iter().collect();
        let mut const_set: BTreeSet<UnitRational> = extra_consts.iter().copied().collect();
        const_set.insert(UnitRational::zero());
        const_set.insert(UnitRational::one());
        if lang == Language::Ginv {
            const_set.insert(UnitRational::half());
            let mirrors: Vec<UnitRational> =
                const_set.iter().map(|c| c.complement()).collect();
            const_set.extend(mirrors);
        }
        let consts: Vec<UnitRational> = const_set.into_iter().collect();
        assert!(
            consts.len() + 2 * vars.len() <= u8::MAX as usize,
            "universe of {} constants and {} variables does not fit the rank space",
            consts.len(),
            vars.len()
        );

        let mut points: Vec<Pt> = (0..consts.len() as u8).map(Pt::Const).collect();
        for vi in 0..vars.len() as u8 {
            match lang {
                Language::BiG => points.push(Pt::Var(vi)),
                Language::Ginv => {
                    points.push(Pt::Var(vi));
                    points.push(Pt::Mirror(vi));
                }
                Language::Gsquare => {
                    points.push(Pt::Coord1(vi));
                    points.push(Pt::Coord2(vi));
                }
            }
        }
        let mirror_of_const = consts
            .iter()
            .map(|c| {
                consts
                    .iter()
                    .position(|d| *d == c.complement())
                    .map(|i| i as u8)
                    .unwrap_or(u8::MAX)
            })
            .collect();
        let c0 = consts
            .iter()
            .position(|c| c.is_zero())
            .expect("0 always present") as u8;
        let c1 = consts
            .iter()
            .position(|c| c.is_one())
            .expect("1 always present") as u8;
        Arc::new(Universe {
            lang,
            vars,
            consts,
            points,
            mirror_of_const,
            c0,
            c1,
        })
    }

    pub fn lang(&self) -> Language {
        self.lang
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn consts(&self) -> &[UnitRational] {
        &self.consts
    }

    pub(crate) fn point_count(&self) -> usize {
        self.points.len()
    }

    pub(crate) fn pt(&self, idx: u8) -> Pt {
        self.points[idx as usize]
    }

    pub(crate) fn const0(&self) -> u8 {
        self.c0
    }

    pub(crate) fn const1(&self) -> u8 {
        self.c1
    }

    /// Index of the point tracking a constant, if it is in the universe.
    pub(crate) fn const_point(&self, c: UnitRational) -> Option<u8> {
        self.consts.iter().position(|d| *d == c).map(|i| i as u8)
    }

    pub(crate) fn var_index(&self, name: &str) -> Option<u8> {
        self.vars.iter().position(|v| v == name).map(|i| i as u8)
    }

    /// Index of the first point of variable `vi`; the second, if the
    /// language has one, follows immediately.
    pub(crate) fn var_point(&self, vi: u8) -> u8 {
        let base = self.consts.len() as u8;
        match self.lang {
            Language::BiG => base + vi,
            Language::Ginv | Language::Gsquare => base + 2 * vi,
        }
    }

    /// The point holding the complement of `idx`, for the involutive
    /// language.
    pub(crate) fn mirror_point(&self, idx: u8) -> u8 {
        match self.pt(idx) {
            Pt::Const(ci) => {
                let m = self.mirror_of_const[ci as usize];
                debug_assert_ne!(m, u8::MAX, "constants are complement-closed");
                m
            }
            Pt::Var(vi) => self.var_point(vi) + 1,
            Pt::Mirror(vi) => self.var_point(vi),
            Pt::Coord1(_) | Pt::Coord2(_) => {
                unreachable!("pair coordinates have no mirror point")
            }
        }
    }

    /// Public name of a point.
    pub fn describe(&self, idx: u8) -> SymbolicPoint {
        match self.pt(idx) {
            Pt::Const(ci) => SymbolicPoint::Const(self.consts[ci as usize]),
            Pt::Var(vi) => SymbolicPoint::Var(self.vars[vi as usize].clone()),
            Pt::Mirror(vi) => SymbolicPoint::Mirror(self.vars[vi as usize].clone()),
            Pt::Coord1(vi) => SymbolicPoint::Coord1(self.vars[vi as usize].clone()),
            Pt::Coord2(vi) => SymbolicPoint::Coord2(self.vars[vi as usize].clone()),
        }
    }

    /// Lazily enumerates every weak order of the points that fixes the
    /// constants in their numeric order (and, for the involutive language,
    /// respects the mirror symmetry). The order of configurations is
    /// deterministic.
    pub fn configs(self: &Arc<Self>) -> ConfigIter {
        let base: Vec<Vec<u8>> = (0..self.consts.len() as u8).map(|ci| vec![ci]).collect();
        let singles: Vec<u8> = match self.lang {
            // The involutive language inserts variable and complement as one
            // linked step; the other two insert one free point at a time.
            Language::Ginv => Vec::new(),
            Language::BiG | Language::Gsquare => (self.consts.len() as u8
                ..self.points.len() as u8)
                .collect(),
        };
        ConfigIter {
            universe: Arc::clone(self),
            singles,
            stack: vec![Frame {
                cells: base,
                unit: 0,
                next_option: 0,
            }],
        }
    }

    /// Abstracts a scalar valuation into its configuration.
    pub fn abstract1(self: &Arc<Self>, v: &Valuation1) -> Result<OrderConfig, DecisionError> {
        if self.lang == Language::Gsquare {
            return Err(DecisionError::WrongValuation {
                lang: self.lang,
                expected: "value pair",
            });
        }
        self.abstract_values(|name| {
            let val = v
                .get(name)
                .copied()
                .ok_or_else(|| DecisionError::unbound(name))?;
            Ok((val, val.complement()))
        })
    }

    /// Abstracts a pair valuation into its configuration.
    pub fn abstract2(self: &Arc<Self>, v: &Valuation2) -> Result<OrderConfig, DecisionError> {
        if self.lang != Language::Gsquare {
            return Err(DecisionError::WrongValuation {
                lang: self.lang,
                expected: "scalar",
            });
        }
        self.abstract_values(|name| {
            let val = v
                .get(name)
                .copied()
                .ok_or_else(|| DecisionError::unbound(name))?;
            Ok((val.first, val.second))
        })
    }

    fn abstract_values(
        self: &Arc<Self>,
        mut lookup: impl FnMut(&str) -> Result<(UnitRational, UnitRational), DecisionError>,
    ) -> Result<OrderConfig, DecisionError> {
        let mut values: Vec<UnitRational> = Vec::with_capacity(self.points.len());
        for pt in &self.points {
            let value = match pt {
                Pt::Const(ci) => self.consts[*ci as usize],
                Pt::Var(vi) | Pt::Coord1(vi) => lookup(&self.vars[*vi as usize])?.0,
                Pt::Mirror(vi) | Pt::Coord2(vi) => lookup(&self.vars[*vi as usize])?.1,
            };
            values.push(value);
        }
        let distinct: BTreeSet<UnitRational> = values.iter().copied().collect();
        let distinct: Vec<UnitRational> = distinct.into_iter().collect();
        let ranks = values
            .iter()
            .map(|v| {
                distinct
                    .binary_search(v)
                    .expect("every value is in the distinct set") as u8
            })
            .collect();
        Ok(OrderConfig {
            universe: Arc::clone(self),
            ranks,
        })
    }
}

/// One weak order over a universe's points: a rank per point, ranks
/// contiguous from 0.
#[derive(Debug, Clone)]
pub struct OrderConfig {
    universe: Arc<Universe>,
    ranks: Vec<u8>,
}

impl OrderConfig {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn ranks(&self) -> &[u8] {
        &self.ranks
    }

    pub(crate) fn rank(&self, idx: u8) -> u8 {
        self.ranks[idx as usize]
    }

    /// Rank of a point given by name, if the universe tracks it.
    pub fn rank_of(&self, point: &SymbolicPoint) -> Option<u8> {
        let u = &self.universe;
        let idx = match point {
            SymbolicPoint::Const(c) => u.const_point(*c)?,
            SymbolicPoint::Var(p) => match u.lang {
                Language::Gsquare => return None,
                _ => u.var_point(u.var_index(p)?),
            },
            SymbolicPoint::Mirror(p) => match u.lang {
                Language::Ginv => u.var_point(u.var_index(p)?) + 1,
                _ => return None,
            },
            SymbolicPoint::Coord1(p) => match u.lang {
                Language::Gsquare => u.var_point(u.var_index(p)?),
                _ => return None,
            },
            SymbolicPoint::Coord2(p) => match u.lang {
                Language::Gsquare => u.var_point(u.var_index(p)?) + 1,
                _ => return None,
            },
        };
        Some(self.rank(idx))
    }

    /// Builds a concrete valuation inducing this configuration.
    ///
    /// Cells holding a constant take its value; each maximal run of free
    /// cells between two anchors splits the gap evenly. Evenly spaced
    /// points between mirror-symmetric anchors are themselves mirror
    /// images, so the involutive constraint holds exactly.
    pub fn realize(&self) -> Witness {
        let n_ranks = self.ranks.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut anchor: Vec<Option<UnitRational>> = vec![None; n_ranks];
        for (idx, pt) in self.universe.points.iter().enumerate() {
            if let Pt::Const(ci) = pt {
                anchor[self.ranks[idx] as usize] = Some(self.universe.consts[*ci as usize]);
            }
        }
        let mut values: Vec<UnitRational> = vec![UnitRational::zero(); n_ranks];
        let mut i = 0;
        while i < n_ranks {
            if let Some(c) = anchor[i] {
                values[i] = c;
                i += 1;
                continue;
            }
            debug_assert!(i > 0, "the bottom cell holds the constant 0");
            let lo = values[i - 1].ratio();
            let mut j = i;
            while anchor[j].is_none() {
                j += 1;
                debug_assert!(j < n_ranks, "the top cell holds the constant 1");
            }
            let hi = anchor[j].expect("scan stopped on an anchor").ratio();
            let k = (j - i) as i64;
            for t in 0..k {
                let frac = Ratio::new(t + 1, k + 1);
                let value = lo + frac * (hi - lo);
                values[i + t as usize] = UnitRational::from_ratio(value)
                    .expect("interpolation between unit values stays in the unit interval");
            }
            i = j;
        }

        let u = &self.universe;
        match u.lang {
            Language::BiG | Language::Ginv => {
                let mut out = Valuation1::new();
                for (vi, name) in u.vars.iter().enumerate() {
                    let idx = u.var_point(vi as u8);
                    let val = values[self.rank(idx) as usize];
                    if u.lang == Language::Ginv {
                        let mirror = values[self.rank(idx + 1) as usize];
                        debug_assert_eq!(
                            mirror,
                            val.complement(),
                            "realized complement must be exact"
                        );
                    }
                    out.insert(name.clone(), val);
                }
                Witness::One(out)
            }
            Language::Gsquare => {
                let mut out = Valuation2::new();
                for (vi, name) in u.vars.iter().enumerate() {
                    let idx = u.var_point(vi as u8);
                    let first = values[self.rank(idx) as usize];
                    let second = values[self.rank(idx + 1) as usize];
                    out.insert(name.clone(), ValuePair::new(first, second));
                }
                Witness::Two(out)
            }
        }
    }
}

struct Frame {
    cells: Vec<Vec<u8>>,
    unit: usize,
    next_option: usize,
}

/// Lazy depth-first enumeration of configurations. Nothing is cached; each
/// step clones one cell vector of at most a few dozen small entries.
pub struct ConfigIter {
    universe: Arc<Universe>,
    /// Points inserted one per step; empty for the involutive language,
    /// where each step places a variable together with its complement.
    singles: Vec<u8>,
    stack: Vec<Frame>,
}

impl ConfigIter {
    fn total_units(&self) -> usize {
        match self.universe.lang {
            Language::Ginv => self.universe.vars.len(),
            Language::BiG | Language::Gsquare => self.singles.len(),
        }
    }

    fn option_count(&self, cells: &[Vec<u8>]) -> usize {
        match self.universe.lang {
            Language::BiG | Language::Gsquare => 2 * cells.len() - 1,
            Language::Ginv => {
                let h = self.half_cell(cells);
                4 * (cells.len() - h) - 3
            }
        }
    }

    fn half_cell(&self, cells: &[Vec<u8>]) -> usize {
        let half = self
            .universe
            .const_point(UnitRational::half())
            .expect("the involutive universe contains 1/2");
        cells
            .iter()
            .position(|cell| cell.contains(&half))
            .expect("every constant sits in some cell")
    }

    fn apply(&self, cells: &[Vec<u8>], unit: usize, option: usize) -> Vec<Vec<u8>> {
        let mut cells = cells.to_vec();
        match self.universe.lang {
            // A single free point: even options join cell k/2, odd options
            // open a new cell in the gap above cell (k-1)/2. Both bounds of
            // the chain are constant cells, so every placement stays inside
            // the unit interval.
            Language::BiG | Language::Gsquare => {
                let p = self.singles[unit];
                if option % 2 == 0 {
                    cells[option / 2].push(p);
                } else {
                    cells.insert(option / 2 + 1, vec![p]);
                }
            }
            // The variable and its complement are placed together. Option 0
            // joins both into the cell of 1/2. The remaining options place
            // the upper of the two points in a gap or cell above 1/2, four
            // per position: one bit picks which point goes on top, and the
            // lower point lands in the mirrored position, keeping the chain
            // symmetric around 1/2.
            Language::Ginv => {
                let var = self.universe.var_point(unit as u8);
                let mirror = var + 1;
                let h = self.half_cell(&cells);
                if option == 0 {
                    cells[h].push(var);
                    cells[h].push(mirror);
                } else {
                    let step = (option - 1) / 4;
                    let kind = (option - 1) % 4;
                    let j = h + 1 + step;
                    let (upper, lower) = if kind % 2 == 0 {
                        (var, mirror)
                    } else {
                        (mirror, var)
                    };
                    let len = cells.len();
                    if kind < 2 {
                        // New cell in the gap below cell j; the mirrored
                        // gap sits at index len - j, below the midpoint, so
                        // inserting there first leaves j's gap at j + 1.
                        cells.insert(len - j, vec![lower]);
                        cells.insert(j + 1, vec![upper]);
                    } else {
                        cells[j].push(upper);
                        cells[len - 1 - j].push(lower);
                    }
                }
            }
        }
        cells
    }

    fn make_config(&self, cells: &[Vec<u8>]) -> OrderConfig {
        let mut ranks = vec![0u8; self.universe.point_count()];
        for (rank, cell) in cells.iter().enumerate() {
            for &idx in cell {
                ranks[idx as usize] = rank as u8;
            }
        }
        OrderConfig {
            universe: Arc::clone(&self.universe),
            ranks,
        }
    }
}

impl Iterator for ConfigIter {
    type Item = OrderConfig;

    fn next(&mut self) -> Option<OrderConfig> {
        loop {
            let depth = self.stack.len();
            if depth == 0 {
                return None;
            }
            let (unit, option) = {
                let top = &self.stack[depth - 1];
                (top.unit, top.next_option)
            };
            if unit == self.total_units() {
                let frame = self.stack.pop().expect("stack checked nonempty");
                return Some(self.make_config(&frame.cells));
            }
            if option >= self.option_count(&self.stack[depth - 1].cells) {
                self.stack.pop();
                continue;
            }
            self.stack[depth - 1].next_option += 1;
            let cells = self.apply(&self.stack[depth - 1].cells, unit, option);
            self.stack.push(Frame {
                cells,
                unit: unit + 1,
                next_option: 0,
            });
        }
    }
}

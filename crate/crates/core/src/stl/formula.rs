//! STL abstract syntax: signal channels, time intervals, affine predicates
//! and the formula tree.

use std::fmt;

use crate::error::{Error, Result};

/// A named signal channel within a trajectory schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Channel {
    pub name: String,
    pub description: String,
}

impl Channel {
    pub fn new(name: impl Into<String>) -> Self {
        Channel {
            name: name.into(),
            description: String::new(),
        }
    }

    pub fn with_description(name: impl Into<String>, description: impl Into<String>) -> Self {
        Channel {
            name: name.into(),
            description: description.into(),
        }
    }
}

/// Builds a schema from bare channel names.
pub fn schema_from_names<S: AsRef<str>>(names: &[S]) -> Vec<Channel> {
    names.iter().map(|n| Channel::new(n.as_ref())).collect()
}

/// Discrete time interval `[lo, hi]` in sample indices; `hi = None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: usize,
    pub hi: Option<usize>,
}

impl Interval {
    pub fn bounded(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(Error::IntervalBounds { lo, hi });
        }
        Ok(Interval { lo, hi: Some(hi) })
    }

    pub fn unbounded_from(lo: usize) -> Self {
        Interval { lo, hi: None }
    }

    /// `[0, inf)`, the default for bare `G`/`F`.
    pub fn full() -> Self {
        Interval { lo: 0, hi: None }
    }

    /// Sample indices of `t + I` clipped to `[0, max_t]`. Empty when the
    /// shifted interval starts past the end of the trajectory.
    pub fn window(&self, t: usize, max_t: usize) -> std::ops::RangeInclusive<usize> {
        let start = t.saturating_add(self.lo);
        let end = match self.hi {
            Some(hi) => t.saturating_add(hi).min(max_t),
            None => max_t,
        };
        start..=end
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(hi) => write!(f, "[{},{}]", self.lo, hi),
            None => write!(f, "[{},inf]", self.lo),
        }
    }
}

/// Comparison operator of a signal predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Lt,
    Le,
    Gt,
    Ge,
}

impl Comparison {
    /// Signed satisfaction margin of `value ⋈ threshold`.
    ///
    /// Positive means satisfied, negative violated; strict and non-strict
    /// variants share the same margin (zero exactly at equality).
    pub fn margin(self, value: f64, threshold: f64) -> f64 {
        match self {
            Comparison::Lt | Comparison::Le => threshold - value,
            Comparison::Gt | Comparison::Ge => value - threshold,
        }
    }

    /// Boolean satisfaction; at margin zero the strict forms reject and the
    /// non-strict forms accept.
    pub fn holds(self, value: f64, threshold: f64) -> bool {
        match self {
            Comparison::Lt => value < threshold,
            Comparison::Le => value <= threshold,
            Comparison::Gt => value > threshold,
            Comparison::Ge => value >= threshold,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Comparison::Lt => "<",
            Comparison::Le => "<=",
            Comparison::Gt => ">",
            Comparison::Ge => ">=",
        }
    }
}

/// Affine expression over channels: `sum(coeff * channel) + constant`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearExpr {
    pub terms: Vec<(f64, String)>,
    pub constant: f64,
}

impl LinearExpr {
    pub fn channel(name: impl Into<String>) -> Self {
        LinearExpr {
            terms: vec![(1.0, name.into())],
            constant: 0.0,
        }
    }

    /// Channel names referenced by this expression.
    pub fn channels(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(|(_, name)| name.as_str())
    }
}

impl fmt::Display for LinearExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coeff, name) in &self.terms {
            if first {
                if *coeff == 1.0 {
                    write!(f, "{name}")?;
                } else if *coeff == -1.0 {
                    write!(f, "-1 * {name}")?;
                } else {
                    write!(f, "{coeff} * {name}")?;
                }
                first = false;
            } else if *coeff < 0.0 {
                if *coeff == -1.0 {
                    write!(f, " - {name}")?;
                } else {
                    write!(f, " - {} * {name}", -coeff)?;
                }
            } else if *coeff == 1.0 {
                write!(f, " + {name}")?;
            } else {
                write!(f, " + {coeff} * {name}")?;
            }
        }
        if first {
            write!(f, "{}", self.constant)?;
        } else if self.constant < 0.0 {
            write!(f, " - {}", -self.constant)?;
        } else if self.constant != 0.0 {
            write!(f, " + {}", self.constant)?;
        }
        Ok(())
    }
}

/// STL formula tree over named channels.
#[derive(Debug, Clone, PartialEq)]
pub enum Formula {
    TrueLit,
    FalseLit,
    Predicate(LinearExpr, Comparison, f64),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Always(Interval, Box<Formula>),
    Eventually(Interval, Box<Formula>),
    Until(Interval, Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Channel names referenced anywhere in the formula.
    pub fn channels(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_channels(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_channels<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Formula::TrueLit | Formula::FalseLit => {}
            Formula::Predicate(expr, _, _) => out.extend(expr.channels()),
            Formula::Not(sub) => sub.collect_channels(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_channels(out);
                b.collect_channels(out);
            }
            Formula::Always(_, sub) | Formula::Eventually(_, sub) => sub.collect_channels(out),
            Formula::Until(_, a, b) => {
                a.collect_channels(out);
                b.collect_channels(out);
            }
        }
    }

    /// True when the top-level operator is `Always`, i.e. the specification
    /// expresses an invariant that must hold over the whole trace.
    pub fn is_safety(&self) -> bool {
        matches!(self, Formula::Always(_, _))
    }

    // Binding strength for the printer: higher binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(_, _) => 0,
            Formula::Or(_, _) => 1,
            Formula::And(_, _) => 2,
            Formula::Not(_) => 3,
            _ => 4,
        }
    }

    fn fmt_child(&self, child: &Formula, min_prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if child.precedence() < min_prec {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::TrueLit => write!(f, "true"),
            Formula::FalseLit => write!(f, "false"),
            Formula::Predicate(expr, cmp, k) => write!(f, "{expr} {} {k}", cmp.symbol()),
            Formula::Not(sub) => {
                write!(f, "not ")?;
                self.fmt_child(sub, 3, f)
            }
            Formula::And(a, b) => {
                self.fmt_child(a, 2, f)?;
                write!(f, " and ")?;
                self.fmt_child(b, 2, f)
            }
            Formula::Or(a, b) => {
                self.fmt_child(a, 1, f)?;
                write!(f, " or ")?;
                self.fmt_child(b, 1, f)
            }
            Formula::Implies(a, b) => {
                // Right-associative: parenthesize a left implication.
                self.fmt_child(a, 1, f)?;
                write!(f, " -> ")?;
                write!(f, "{b}")
            }
            Formula::Always(interval, sub) => {
                if *interval == Interval::full() {
                    write!(f, "G({sub})")
                } else {
                    write!(f, "G{interval}({sub})")
                }
            }
            Formula::Eventually(interval, sub) => {
                if *interval == Interval::full() {
                    write!(f, "F({sub})")
                } else {
                    write!(f, "F{interval}({sub})")
                }
            }
            Formula::Until(interval, lhs, rhs) => write!(f, "({lhs}) U{interval} ({rhs})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_rejects_inverted_bounds() {
        assert!(matches!(
            Interval::bounded(5, 2),
            Err(Error::IntervalBounds { lo: 5, hi: 2 })
        ));
    }

    #[test]
    fn window_clips_to_trajectory() {
        let i = Interval::bounded(0, 2).unwrap();
        assert_eq!(i.window(1, 2), 1..=2);
        let unbounded = Interval::full();
        assert_eq!(unbounded.window(0, 5), 0..=5);
    }

    #[test]
    fn window_is_empty_past_the_end() {
        let i = Interval::bounded(3, 4).unwrap();
        assert!(i.window(2, 4).is_empty());
    }

    #[test]
    fn margin_is_signed_distance() {
        assert_eq!(Comparison::Lt.margin(0.5, 2.0), 1.5);
        assert_eq!(Comparison::Gt.margin(0.5, 2.0), -1.5);
        assert_eq!(Comparison::Ge.margin(2.0, 2.0), 0.0);
    }

    #[test]
    fn strictness_only_matters_at_equality() {
        assert!(!Comparison::Lt.holds(2.0, 2.0));
        assert!(Comparison::Le.holds(2.0, 2.0));
        assert!(!Comparison::Gt.holds(2.0, 2.0));
        assert!(Comparison::Ge.holds(2.0, 2.0));
    }

    #[test]
    fn safety_means_top_level_always() {
        let inner = Formula::Predicate(LinearExpr::channel("safe"), Comparison::Gt, 0.0);
        assert!(Formula::Always(Interval::full(), Box::new(inner.clone())).is_safety());
        assert!(!Formula::Eventually(Interval::full(), Box::new(inner)).is_safety());
    }
}

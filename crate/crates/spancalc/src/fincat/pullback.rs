//! Pullback squares with replayable universality certificates.

use super::category::{FinCategory, MorId, ObjId};

/// Deterministic choice of pullback when several isomorphic ones exist.
///
/// `LeastIndex` scans apex objects, then both legs, in increasing index
/// order and takes the first square that verifies; `GreatestIndex` scans
/// in decreasing order.  Both must produce equivalent spans; exercising
/// the two extremes is how independence of the chosen pullback is tested.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ChoiceStrategy {
    #[default]
    LeastIndex,
    GreatestIndex,
}

/// A verified pullback of the cospan `f: y -> x <- x': g`.
///
/// The square is
///
/// ```text
///        to_g_source
///   apex ----------> x'
///    |               |
///    | to_f_source   | g
///    v               v
///    y ----- f ----> x
/// ```
///
/// `certificate` lists, for every cone `(a: w -> y, b: w -> x')` with
/// `f . a = g . b`, the unique mediating morphism `u: w -> apex`; it can
/// be replayed against the category to re-verify universality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackSquare {
    pub f: MorId,
    pub g: MorId,
    pub apex: ObjId,
    pub to_f_source: MorId,
    pub to_g_source: MorId,
    pub certificate: Vec<((MorId, MorId), MorId)>,
}

impl PullbackSquare {
    /// Re-verifies the square from scratch: commutativity, certificate
    /// completeness (one entry per cone), and mediator correctness and
    /// uniqueness.
    pub fn replay(&self, c: &FinCategory) -> bool {
        if !square_commutes(c, self.f, self.g, self.to_f_source, self.to_g_source) {
            return false;
        }
        let mut entries = self.certificate.iter();
        for w in c.objects() {
            for &a in c.hom(w, c.src(self.f)) {
                for &b in c.hom(w, c.src(self.g)) {
                    if c.compose(self.f, a) != c.compose(self.g, b) {
                        continue;
                    }
                    let Some(&((ca, cb), u)) = entries.next() else {
                        return false;
                    };
                    if (ca, cb) != (a, b) {
                        return false;
                    }
                    let mediates = |v: MorId| {
                        c.compose(self.to_f_source, v) == Some(a)
                            && c.compose(self.to_g_source, v) == Some(b)
                    };
                    if !mediates(u) {
                        return false;
                    }
                    if c.hom(w, self.apex).iter().filter(|&&v| mediates(v)).count() != 1 {
                        return false;
                    }
                }
            }
        }
        entries.next().is_none()
    }
}

fn square_commutes(c: &FinCategory, f: MorId, g: MorId, p: MorId, q: MorId) -> bool {
    c.tgt(f) == c.tgt(g)
        && c.src(p) == c.src(q)
        && c.tgt(p) == c.src(f)
        && c.tgt(q) == c.src(g)
        && c.compose(f, p) == c.compose(g, q)
}

/// Decides whether the square with legs `p: w -> src f`, `q: w -> src g`
/// is a pullback of the cospan `(f, g)`, by checking every cone for a
/// unique mediator.
pub fn is_pullback_square(c: &FinCategory, f: MorId, g: MorId, p: MorId, q: MorId) -> bool {
    certify(c, f, g, p, q).is_some()
}

fn certify(
    c: &FinCategory,
    f: MorId,
    g: MorId,
    p: MorId,
    q: MorId,
) -> Option<Vec<((MorId, MorId), MorId)>> {
    if !square_commutes(c, f, g, p, q) {
        return None;
    }
    let apex = c.src(p);
    let mut certificate = Vec::new();
    for w in c.objects() {
        for &a in c.hom(w, c.src(f)) {
            for &b in c.hom(w, c.src(g)) {
                if c.compose(f, a) != c.compose(g, b) {
                    continue;
                }
                let mut mediators = c.hom(w, apex).iter().copied().filter(|&u| {
                    c.compose(p, u) == Some(a) && c.compose(q, u) == Some(b)
                });
                let u = mediators.next()?;
                if mediators.next().is_some() {
                    return None;
                }
                certificate.push(((a, b), u));
            }
        }
    }
    Some(certificate)
}

/// Computes a pullback of the cospan `f: y -> x <- x': g`, or `None` when
/// no pullback exists.  The apex and legs are chosen deterministically
/// according to `strategy`.
pub fn compute_pullback(
    c: &FinCategory,
    f: MorId,
    g: MorId,
    strategy: ChoiceStrategy,
) -> Option<PullbackSquare> {
    assert_eq!(c.tgt(f), c.tgt(g), "pullback requires a cospan");
    let objects: Vec<ObjId> = match strategy {
        ChoiceStrategy::LeastIndex => c.objects().collect(),
        ChoiceStrategy::GreatestIndex => c.objects().rev().collect(),
    };
    for w in objects {
        let mut ps = c.hom(w, c.src(f)).to_vec();
        let mut qs = c.hom(w, c.src(g)).to_vec();
        if strategy == ChoiceStrategy::GreatestIndex {
            ps.reverse();
            qs.reverse();
        }
        for &p in &ps {
            for &q in &qs {
                if let Some(certificate) = certify(c, f, g, p, q) {
                    return Some(PullbackSquare {
                        f,
                        g,
                        apex: w,
                        to_f_source: p,
                        to_g_source: q,
                        certificate,
                    });
                }
            }
        }
    }
    None
}

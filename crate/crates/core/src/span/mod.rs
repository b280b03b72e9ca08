//! Spans of groupoids `B ← X → A` as 1-morphisms on (coloured) finite sets.
//!
//! `left` points at the target and `right` at the source, so a span is read
//! as an operator from its right boundary to its left boundary.

mod iso;
mod word;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::groupoid::{
    fs_truncated, same_groupoid, GroupoidFunctor, Permutation, SkeletalGroupoid, WeakPullback,
};

pub use iso::{spans_isomorphic, tameness_report, SpanIsoWitness, TamenessEntry, TamenessReport};
pub use word::{format_word, word_height, word_span, Letter};

/// Truncation data carried by every span.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TruncationWindow {
    pub max_card: usize,
    /// Number of creation/annihilation letters in the word that built the span.
    pub degree: usize,
}

impl TruncationWindow {
    /// Largest boundary cardinality on which the span agrees with its
    /// untruncated counterpart.
    pub fn safe_bound(&self) -> Option<usize> {
        self.max_card.checked_sub(self.degree)
    }
}

#[derive(Clone, Debug)]
pub struct Span {
    pub apex: Arc<SkeletalGroupoid>,
    /// Leg into the target boundary.
    pub left: GroupoidFunctor,
    /// Leg into the source boundary.
    pub right: GroupoidFunctor,
    pub window: TruncationWindow,
    /// Present when the apex was built as a weak pullback by [`compose`].
    pub pullback: Option<Arc<WeakPullback>>,
    pub notes: Vec<String>,
}

type FsKey = (usize, usize);

/// The shared truncation `FS^colors_{≤ max_card}`.
///
/// Every span on the same window uses the same allocation, so boundary
/// checks are usually pointer comparisons.
pub fn fs_shared(max_card: usize, colors: usize) -> Arc<SkeletalGroupoid> {
    static CACHE: OnceLock<Mutex<HashMap<FsKey, Arc<SkeletalGroupoid>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry((max_card, colors))
        .or_insert_with(|| Arc::new(fs_truncated(max_card, colors)))
        .clone()
}

/// The inclusion of `FS^colors_{≤ max_card-1}` into `FS^colors_{≤ max_card}`.
pub fn inclusion(max_card: usize, colors: usize) -> GroupoidFunctor {
    let src = fs_shared(max_card.saturating_sub(1), colors);
    let tgt = fs_shared(max_card, colors);
    if max_card == 0 {
        return empty_functor(&tgt);
    }
    // Components are ordered by total size, so the smaller truncation is a prefix.
    GroupoidFunctor::from_rule(&src, &tgt, |i| (i, Box::new(|g: &Permutation| g.clone())))
}

/// `+1_c`: adjoin one element of colour `colour` (0-indexed), placed at the end
/// of that colour's block.
pub fn plus_one(max_card: usize, colors: usize, colour: usize) -> Result<GroupoidFunctor> {
    if colour >= colors {
        return Err(Error::ColourOutOfRange {
            index: colour + 1,
            max: colors,
        });
    }
    let tgt = fs_shared(max_card, colors);
    if max_card == 0 {
        return Ok(empty_functor(&tgt));
    }
    let src = fs_shared(max_card - 1, colors);
    Ok(GroupoidFunctor::from_rule(&src, &tgt, |i| {
        let mut profile = src.profile(i).to_vec();
        let at: usize = profile[..=colour].iter().sum();
        profile[colour] += 1;
        let j = tgt.find_profile(&profile).expect("enlarged profile fits the window");
        (j, Box::new(move |g: &Permutation| g.insert_fixed(at)))
    }))
}

fn empty_functor(target: &Arc<SkeletalGroupoid>) -> GroupoidFunctor {
    GroupoidFunctor {
        source: Arc::new(SkeletalGroupoid::empty()),
        target: target.clone(),
        object_map: Vec::new(),
        morphism_map: Vec::new(),
    }
}

impl Span {
    #[allow(clippy::misnamed_getters)]
    pub fn source(&self) -> &Arc<SkeletalGroupoid> {
        &self.right.target
    }

    pub fn target(&self) -> &Arc<SkeletalGroupoid> {
        &self.left.target
    }

    pub fn class_count(&self) -> usize {
        self.apex.len()
    }

    /// Checks both legs and the window invariant.
    pub fn validate(&self) -> Result<()> {
        if !same_groupoid(&self.left.source, &self.apex) || !same_groupoid(&self.right.source, &self.apex) {
            return Err(Error::InvalidFunctor("legs do not start at the apex".into()));
        }
        self.left.validate()?;
        self.right.validate()?;
        let fits = |f: &GroupoidFunctor| f.object_map.iter().all(|&b| f.target.cardinality_of(b) <= self.window.max_card);
        if !fits(&self.left) || !fits(&self.right) {
            return Err(Error::OutsideWindow("leg image exceeds max-card".into()));
        }
        Ok(())
    }

    /// A span without pullback data or notes.
    pub fn with_legs(apex: Arc<SkeletalGroupoid>, left: GroupoidFunctor, right: GroupoidFunctor, window: TruncationWindow) -> Span {
        Span {
            apex,
            left,
            right,
            window,
            pullback: None,
            notes: Vec::new(),
        }
    }
}

fn letter_span(max_card: usize, colors: usize, colour: usize, raise: bool) -> Result<Span> {
    let inc = inclusion(max_card, colors);
    let plus = plus_one(max_card, colors, colour)?;
    let apex = inc.source.clone();
    let (left, right) = if raise { (plus, inc) } else { (inc, plus) };
    let mut span = Span::with_legs(apex, left, right, TruncationWindow { max_card, degree: 1 });
    if max_card == 0 {
        span.notes.push("max-card 0: no history fits, apex is empty".into());
    }
    Ok(span)
}

/// `A†`: left leg `+1`, right leg the inclusion.
pub fn creation_span(max_card: usize) -> Span {
    letter_span(max_card, 1, 0, true).expect("colour 0 of 1")
}

/// `A`: left leg the inclusion, right leg `+1`.
pub fn annihilation_span(max_card: usize) -> Span {
    letter_span(max_card, 1, 0, false).expect("colour 0 of 1")
}

/// `A†_c` on `colors`-coloured sets; `colour` is 1-indexed.
pub fn colored_creation_span(max_card: usize, colors: usize, colour: usize) -> Result<Span> {
    letter_span(max_card, colors, checked_colour(colour, colors)?, true)
}

/// `A_c` on `colors`-coloured sets; `colour` is 1-indexed.
pub fn colored_annihilation_span(max_card: usize, colors: usize, colour: usize) -> Result<Span> {
    letter_span(max_card, colors, checked_colour(colour, colors)?, false)
}

pub(crate) fn checked_colour(colour: usize, colors: usize) -> Result<usize> {
    if colour == 0 || colour > colors {
        return Err(Error::ColourOutOfRange {
            index: colour,
            max: colors,
        });
    }
    Ok(colour - 1)
}

/// Identity legs on `g`.
pub fn identity_span(g: &Arc<SkeletalGroupoid>, max_card: usize) -> Span {
    let id = GroupoidFunctor::identity(g);
    Span::with_legs(g.clone(), id.clone(), id, TruncationWindow { max_card, degree: 0 })
}

/// The span with empty apex between `source` and `target`.
pub fn zero_span(source: &Arc<SkeletalGroupoid>, target: &Arc<SkeletalGroupoid>, window: TruncationWindow) -> Span {
    let left = empty_functor(target);
    let mut right = empty_functor(source);
    right.source = left.source.clone();
    Span::with_legs(left.source.clone(), left, right, window)
}

/// `T ∘ S`: first `S`, then `T`.
pub fn compose(t: &Span, s: &Span) -> Result<Span> {
    if !same_groupoid(s.target(), t.source()) {
        return Err(Error::BoundaryMismatch("target of the first span is not the source of the second".into()));
    }
    let pb = WeakPullback::new(&s.left, &t.right)?;
    let left = t.left.after(&pb.proj_second);
    let right = s.right.after(&pb.proj_first);
    let window = TruncationWindow {
        max_card: s.window.max_card.min(t.window.max_card),
        degree: s.window.degree + t.window.degree,
    };
    let mut span = Span::with_legs(pb.groupoid.clone(), left, right, window);
    span.pullback = Some(Arc::new(pb));
    Ok(span)
}

/// The converse span.
pub fn dagger(s: &Span) -> Span {
    Span {
        apex: s.apex.clone(),
        left: s.right.clone(),
        right: s.left.clone(),
        window: s.window,
        pullback: None,
        notes: s.notes.clone(),
    }
}

/// Disjoint union of apexes with the legs taken componentwise.
pub fn direct_sum(s: &Span, t: &Span) -> Result<Span> {
    if !same_groupoid(s.source(), t.source()) || !same_groupoid(s.target(), t.target()) {
        return Err(Error::BoundaryMismatch("direct sum of spans with different boundaries".into()));
    }
    let apex = Arc::new(SkeletalGroupoid::disjoint_union(&[&s.apex, &t.apex]));
    let n = s.apex.len();
    let leg = |a: &GroupoidFunctor, b: &GroupoidFunctor| {
        GroupoidFunctor::from_rule(&apex, &a.target, |i| {
            let (f, k) = if i < n { (a, i) } else { (b, i - n) };
            (f.object(k), Box::new(move |g: &Permutation| f.map(k, g).clone()))
        })
    };
    let left = leg(&s.left, &t.left);
    let right = leg(&s.right, &t.right);
    let window = TruncationWindow {
        max_card: s.window.max_card.min(t.window.max_card),
        degree: s.window.degree.max(t.window.degree),
    };
    Ok(Span::with_legs(apex, left, right, window))
}

/// Apex classes whose two leg images both have cardinality at most `bound`,
/// in their original order.
pub fn classes_within(s: &Span, bound: usize) -> Vec<usize> {
    (0..s.apex.len())
        .filter(|&i| {
            s.left.target.cardinality_of(s.left.object(i)) <= bound
                && s.right.target.cardinality_of(s.right.object(i)) <= bound
        })
        .collect()
}

/// Restriction of the apex to the classes whose source-leg image has
/// cardinality at most `bound`.
pub fn restrict_to_source(s: &Span, bound: usize) -> Span {
    let keep: Vec<usize> = (0..s.apex.len())
        .filter(|&i| s.right.target.cardinality_of(s.right.object(i)) <= bound)
        .collect();
    restricted(s, &keep)
}

/// Restriction of the apex to [`classes_within`] `bound`.
pub fn restrict_to_bound(s: &Span, bound: usize) -> Span {
    restricted(s, &classes_within(s, bound))
}

fn restricted(s: &Span, keep: &[usize]) -> Span {
    let apex = Arc::new(s.apex.restrict(keep));
    let mut out = Span::with_legs(
        apex.clone(),
        s.left.restrict(keep, &apex),
        s.right.restrict(keep, &apex),
        s.window,
    );
    out.notes = s.notes.clone();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aad(m: usize) -> Span {
        compose(&annihilation_span(m), &creation_span(m)).unwrap()
    }

    #[test]
    fn letters() {
        let a = annihilation_span(3);
        a.validate().unwrap();
        assert_eq!(a.apex.len(), 3);
        let images: Vec<usize> = (0..3).map(|i| a.source().cardinality_of(a.right.object(i))).collect();
        assert_eq!(images, vec![1, 2, 3]);
        let c = creation_span(1);
        assert_eq!(c.apex.len(), 1);
        assert_eq!(c.target().cardinality_of(c.left.object(0)), 1);
        let d = dagger(&annihilation_span(4));
        let c4 = creation_span(4);
        assert_eq!(d.left, c4.left);
        assert_eq!(d.right, c4.right);
        assert!(creation_span(0).apex.is_empty());
    }

    #[test]
    fn table_fourteen() {
        let s = aad(6);
        s.validate().unwrap();
        for n in 0..=5 {
            let mut orders: Vec<usize> = (0..s.apex.len())
                .filter(|&i| s.source().cardinality_of(s.right.object(i)) == n)
                .map(|i| s.apex.aut(i).order())
                .collect();
            orders.sort_unstable();
            let fact = |k: usize| (1..=k).product::<usize>();
            if n == 0 {
                assert_eq!(orders, vec![1]);
            } else {
                assert_eq!(orders, vec![fact(n - 1), fact(n)]);
            }
        }
    }

    #[test]
    fn colored_letters() {
        let a = colored_annihilation_span(2, 2, 2).unwrap();
        a.validate().unwrap();
        assert!(colored_creation_span(2, 2, 3).is_err());
        let p = plus_one(3, 2, 0).unwrap();
        p.validate().unwrap();
        // (1,1) gains a colour-1 point at position 1, before the colour-2 block.
        let i = p.source.find_profile(&[1, 1]).unwrap();
        assert_eq!(p.target.profile(p.object(i)), &[2, 1]);
    }

    #[test]
    fn sums_and_restrictions() {
        let m = 4;
        let fs = fs_shared(m, 1);
        let a = annihilation_span(m);
        let z = zero_span(&fs, &fs, a.window);
        let s = direct_sum(&a, &z).unwrap();
        s.validate().unwrap();
        assert_eq!(s.apex.len(), a.apex.len());
        let r = restrict_to_bound(&aad(m), 2);
        r.validate().unwrap();
        assert_eq!(r.apex.len(), 5);
        assert!(compose(&annihilation_span(3), &annihilation_span(4)).is_err());
    }
}

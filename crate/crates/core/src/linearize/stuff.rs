use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ladder_matrices;
use crate::error::{Error, Result};
use crate::groupoid::{GroupHom, GroupoidFunctor, SkeletalGroupoid};
use crate::span::{compose, fs_shared, inclusion, plus_one, Span, TruncationWindow};

/// A span from the one-object groupoid to (coloured) finite sets: a
/// groupoid over `FS`.
#[derive(Clone, Debug)]
pub struct StuffType(pub Span);

fn point() -> Arc<SkeletalGroupoid> {
    static POINT: OnceLock<Arc<SkeletalGroupoid>> = OnceLock::new();
    POINT.get_or_init(|| Arc::new(SkeletalGroupoid::terminal())).clone()
}

fn to_point(apex: &Arc<SkeletalGroupoid>) -> GroupoidFunctor {
    let pt = point();
    GroupoidFunctor {
        source: apex.clone(),
        target: pt.clone(),
        object_map: vec![0; apex.len()],
        morphism_map: apex.components.iter().map(|c| GroupHom::to_trivial(&c.aut, pt.aut(0))).collect(),
    }
}

impl StuffType {
    /// Wraps a span whose source is the one-object groupoid with trivial
    /// automorphisms.
    pub fn new(span: Span) -> Result<Self> {
        let src = span.source();
        if src.len() != 1 || src.aut(0).order() != 1 {
            return Err(Error::BoundaryMismatch("a stuff type has the point as its source".into()));
        }
        Ok(StuffType(span))
    }

    /// A groupoid `apex` with the functor `over` into finite sets.
    pub fn over(over: GroupoidFunctor, max_card: usize) -> Self {
        let apex = over.source.clone();
        StuffType(Span::with_legs(apex.clone(), over, to_point(&apex), TruncationWindow { max_card, degree: 0 }))
    }

    pub fn span(&self) -> &Span {
        &self.0
    }
}

/// `FS` over itself.
pub fn identity_stuff_type(max_card: usize) -> StuffType {
    let fs = fs_shared(max_card, 1);
    StuffType::over(GroupoidFunctor::identity(&fs), max_card)
}

/// Pointed finite sets, lying over `FS` by `+1`.
pub fn pointed_set_stuff_type(max_card: usize) -> Result<StuffType> {
    Ok(StuffType::over(plus_one(max_card, 1, 0)?, max_card))
}

pub fn empty_stuff_type(max_card: usize) -> StuffType {
    let mut f = inclusion(max_card, 1);
    f.source = Arc::new(SkeletalGroupoid::empty());
    f.object_map.clear();
    f.morphism_map.clear();
    StuffType::over(f, max_card)
}

/// `Σ 1/|Aut x|` over apex classes `x` lying over each cardinality profile.
pub fn stuff_type_profile_weights(psi: &StuffType) -> Vec<(Vec<usize>, BigRational)> {
    let s = &psi.0;
    let tgt = s.target();
    let mut out: Vec<(Vec<usize>, BigRational)> =
        (0..tgt.len()).map(|b| (tgt.profile(b).to_vec(), BigRational::zero())).collect();
    for x in 0..s.apex.len() {
        out[s.left.object(x)].1 += BigRational::new(BigInt::from(1), BigInt::from(s.apex.aut(x).order()));
    }
    out
}

/// Coefficients of `z^0 … z^{max_n}`, grading by total cardinality.
pub fn stuff_type_gf(psi: &StuffType, max_n: usize) -> Result<Vec<BigRational>> {
    if max_n > psi.0.window.max_card {
        return Err(Error::WindowTooSmall {
            required: max_n,
            available: psi.0.window.max_card,
        });
    }
    let mut coeffs = vec![BigRational::zero(); max_n + 1];
    for (profile, w) in stuff_type_profile_weights(psi) {
        let n: usize = profile.iter().sum();
        if n <= max_n {
            coeffs[n] += w;
        }
    }
    Ok(coeffs)
}

/// `S ∘ Ψ`.
pub fn act_on_stuff_type(s: &Span, psi: &StuffType) -> Result<StuffType> {
    Ok(StuffType(compose(s, &psi.0)?))
}

/// The `(0, 0)` entry of `(D(A) + D(A†))^k`.
pub fn vacuum_moment(k: usize, window: usize) -> Result<BigRational> {
    if window < k {
        return Err(Error::WindowTooSmall {
            required: k,
            available: window,
        });
    }
    let (a, ad) = ladder_matrices(window)?;
    let phi = &a + &ad;
    Ok(phi.pow(k as u32).get(0, 0).clone())
}

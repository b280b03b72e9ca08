use std::sync::Arc;

use super::{vertical_compose, TwoCell};
use crate::error::{Error, Result};
use crate::groupoid::{GroupoidFunctor, NaturalIso, WeakPullback};
use crate::span::{compose, identity_span, Span};

fn pullback_of(s: &Span) -> Result<&WeakPullback> {
    s.pullback
        .as_deref()
        .ok_or_else(|| Error::BoundaryMismatch("composite span carries no pullback data".into()))
}

fn iso(objects: Vec<usize>, components: Vec<crate::groupoid::Permutation>) -> NaturalIso {
    NaturalIso { objects, components }
}

/// `R ∘ α`, with the composites `R ∘ S` and `R ∘ S'` supplied by the caller.
pub(crate) fn whisker_left_with(r: &Span, alpha: &TwoCell, rs: &Arc<Span>, rs2: &Arc<Span>) -> Result<TwoCell> {
    let (s, s2) = (&alpha.source, &alpha.target);
    let (pb1, pb2) = (pullback_of(rs)?, pullback_of(rs2)?);
    let w = WeakPullback::new(&s.left.after(&alpha.to_source), &r.right)?;
    let u = alpha.to_source.after(&w.proj_first);
    let (p, zg, zh) = pb1.pair(&u, &w.proj_second, &w.iso)?;
    let theta2 = iso(
        w.iso.objects.clone(),
        w.classes
            .iter()
            .zip(&w.iso.components)
            .map(|(c, f)| f.compose(&alpha.mu.components[c.first].inverse()))
            .collect(),
    );
    let u2 = alpha.to_target.after(&w.proj_first);
    let (q, zg2, zh2) = pb2.pair(&u2, &w.proj_second, &theta2)?;
    let mut mu = Vec::with_capacity(w.classes.len());
    let mut nu = Vec::with_capacity(w.classes.len());
    for (k, c) in w.classes.iter().enumerate() {
        let (z, v) = (c.first, c.second);
        let (g, h) = (&zg.components[k], &zh.components[k]);
        let (g2, h2) = (&zg2.components[k], &zh2.components[k]);
        mu.push(r.left.map(v, &h2.compose(&h.inverse())).clone());
        let x = alpha.to_source.object(z);
        let x2 = alpha.to_target.object(z);
        nu.push(
            s2.right
                .map(x2, g2)
                .compose(&alpha.nu.components[z])
                .compose(&s.right.map(x, g).inverse()),
        );
    }
    Ok(TwoCell {
        source: rs.clone(),
        target: rs2.clone(),
        apex: w.groupoid.clone(),
        mu: iso(w.classes.iter().map(|c| r.left.object(c.second)).collect(), mu),
        nu: iso(zg.objects.iter().map(|&x| s.right.object(x)).collect(), nu),
        to_source: p,
        to_target: q,
    })
}

/// `α ∘ R`, with the composites `S ∘ R` and `S' ∘ R` supplied by the caller.
pub(crate) fn whisker_right_with(alpha: &TwoCell, r: &Span, sr: &Arc<Span>, s2r: &Arc<Span>) -> Result<TwoCell> {
    let (s, s2) = (&alpha.source, &alpha.target);
    let (pb1, pb2) = (pullback_of(sr)?, pullback_of(s2r)?);
    let w = WeakPullback::new(&r.left, &s.right.after(&alpha.to_source))?;
    let v1 = alpha.to_source.after(&w.proj_second);
    let (p, zg, zh) = pb1.pair(&w.proj_first, &v1, &w.iso)?;
    let theta2 = iso(
        w.classes.iter().map(|c| s2.right.object(alpha.to_target.object(c.second))).collect(),
        w.classes
            .iter()
            .zip(&w.iso.components)
            .map(|(c, f)| alpha.nu.components[c.second].compose(f))
            .collect(),
    );
    let v2 = alpha.to_target.after(&w.proj_second);
    let (q, zg2, zh2) = pb2.pair(&w.proj_first, &v2, &theta2)?;
    let mut mu = Vec::with_capacity(w.classes.len());
    let mut nu = Vec::with_capacity(w.classes.len());
    for (k, c) in w.classes.iter().enumerate() {
        let (v, z) = (c.first, c.second);
        let (g, h) = (&zg.components[k], &zh.components[k]);
        let (g2, h2) = (&zg2.components[k], &zh2.components[k]);
        let x = alpha.to_source.object(z);
        let x2 = alpha.to_target.object(z);
        mu.push(
            s2.left
                .map(x2, h2)
                .compose(&alpha.mu.components[z])
                .compose(&s.left.map(x, h).inverse()),
        );
        nu.push(r.right.map(v, &g2.compose(&g.inverse())).clone());
    }
    Ok(TwoCell {
        source: sr.clone(),
        target: s2r.clone(),
        apex: w.groupoid.clone(),
        mu: iso(zh.objects.iter().map(|&x| s.left.object(x)).collect(), mu),
        nu: iso(w.classes.iter().map(|c| r.right.object(c.first)).collect(), nu),
        to_source: p,
        to_target: q,
    })
}

/// `R ∘ α: R ∘ S ⇒ R ∘ S'`.
pub fn whisker_left(r: &Span, alpha: &TwoCell) -> Result<TwoCell> {
    let rs = Arc::new(compose(r, &alpha.source)?);
    let rs2 = Arc::new(compose(r, &alpha.target)?);
    whisker_left_with(r, alpha, &rs, &rs2)
}

/// `α ∘ R: S ∘ R ⇒ S' ∘ R`.
pub fn whisker_right(alpha: &TwoCell, r: &Span) -> Result<TwoCell> {
    let sr = Arc::new(compose(&alpha.source, r)?);
    let s2r = Arc::new(compose(&alpha.target, r)?);
    whisker_right_with(alpha, r, &sr, &s2r)
}

/// `β ∘ α = (β ∘ S') · (T ∘ α)` for `α: S ⇒ S'` and `β: T ⇒ T'`.
pub fn horizontal_compose(beta: &TwoCell, alpha: &TwoCell) -> Result<TwoCell> {
    let ts = Arc::new(compose(&beta.source, &alpha.source)?);
    let ts2 = Arc::new(compose(&beta.source, &alpha.target)?);
    let t2s2 = Arc::new(compose(&beta.target, &alpha.target)?);
    let first = whisker_left_with(&beta.source, alpha, &ts, &ts2)?;
    let second = whisker_right_with(beta, &alpha.target, &ts2, &t2s2)?;
    vertical_compose(&second, &first)
}

/// The associator `(T ∘ S) ∘ R ⇒ T ∘ (S ∘ R)` for supplied composites.
pub(crate) fn associator_with(
    t: &Span,
    s: &Span,
    r: &Span,
    ts: &Span,
    ts_r: &Arc<Span>,
    sr: &Span,
    t_sr: &Arc<Span>,
) -> Result<TwoCell> {
    let outer = pullback_of(ts_r)?;
    let pts = pullback_of(ts)?;
    let psr = pullback_of(sr)?;
    let ptsr = pullback_of(t_sr)?;
    let v1 = pts.proj_first.after(&outer.proj_second);
    let (k, zg, zh) = psr.pair(&outer.proj_first, &v1, &outer.iso)?;
    let n = outer.classes.len();
    let mut theta = Vec::with_capacity(n);
    for (z, c) in outer.classes.iter().enumerate() {
        let inner = &pts.classes[c.second];
        theta.push(inner.map.compose(&s.left.map(inner.first, &zh.components[z]).inverse()));
    }
    let theta = iso((0..n).map(|z| s.left.object(zh.objects[z])).collect(), theta);
    let v2 = pts.proj_second.after(&outer.proj_second);
    let (q, zg2, zh2) = ptsr.pair(&k, &v2, &theta)?;
    let mut mu = Vec::with_capacity(n);
    let mut nu = Vec::with_capacity(n);
    for (z, c) in outer.classes.iter().enumerate() {
        let t_obj = pts.classes[c.second].second;
        mu.push(t.left.map(t_obj, &zh2.components[z]).clone());
        let a = psr.proj_first.map(k.object(z), &zg2.components[z]);
        nu.push(r.right.map(c.first, &a.compose(&zg.components[z])).clone());
    }
    let apex = ts_r.apex.clone();
    Ok(TwoCell {
        source: ts_r.clone(),
        target: t_sr.clone(),
        to_source: GroupoidFunctor::identity(&apex),
        to_target: q,
        mu: iso(outer.classes.iter().map(|c| t.left.object(pts.classes[c.second].second)).collect(), mu),
        nu: iso(outer.classes.iter().map(|c| r.right.object(c.first)).collect(), nu),
        apex,
    })
}

/// `(T ∘ S) ∘ R ⇒ T ∘ (S ∘ R)`.
pub fn associator(t: &Span, s: &Span, r: &Span) -> Result<TwoCell> {
    let ts = compose(t, s)?;
    let ts_r = Arc::new(compose(&ts, r)?);
    let sr = compose(s, r)?;
    let t_sr = Arc::new(compose(t, &sr)?);
    associator_with(t, s, r, &ts, &ts_r, &sr, &t_sr)
}

/// `id ∘ S ⇒ S` for the supplied composite `id ∘ S`.
pub(crate) fn left_unitor_with(s: &Arc<Span>, id_s: &Arc<Span>) -> Result<TwoCell> {
    let pb = pullback_of(id_s)?;
    let apex = id_s.apex.clone();
    Ok(TwoCell {
        source: id_s.clone(),
        target: s.clone(),
        to_source: GroupoidFunctor::identity(&apex),
        to_target: pb.proj_first.clone(),
        mu: pb.iso.inverse(),
        nu: NaturalIso::identity(&id_s.right),
        apex,
    })
}

/// `S ∘ id ⇒ S` for the supplied composite `S ∘ id`.
pub(crate) fn right_unitor_with(s: &Arc<Span>, s_id: &Arc<Span>) -> Result<TwoCell> {
    let pb = pullback_of(s_id)?;
    let apex = s_id.apex.clone();
    Ok(TwoCell {
        source: s_id.clone(),
        target: s.clone(),
        to_source: GroupoidFunctor::identity(&apex),
        to_target: pb.proj_second.clone(),
        mu: NaturalIso::identity(&s_id.left),
        nu: pb.iso.clone(),
        apex,
    })
}

/// `id ∘ S ⇒ S`.
pub fn left_unitor(s: &Arc<Span>) -> Result<TwoCell> {
    let id = identity_span(s.target(), s.window.max_card);
    left_unitor_with(s, &Arc::new(compose(&id, s)?))
}

/// `S ∘ id ⇒ S`.
pub fn right_unitor(s: &Arc<Span>) -> Result<TwoCell> {
    let id = identity_span(s.source(), s.window.max_card);
    right_unitor_with(s, &Arc::new(compose(s, &id)?))
}

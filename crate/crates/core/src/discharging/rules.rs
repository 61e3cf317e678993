use std::collections::BTreeMap;

use super::{q, ChargeElement, Rule, Transfer, Q};
use crate::drawing::{FaceIndex, OnePlanarDrawing};

fn small(d: &OnePlanarDrawing, v: usize) -> bool {
    d.degree(v) <= 5
}

/// Δ-vertices and 3-vertices of the underlying graph (a true vertex has the
/// same degree in `G` and `G×`).
pub(super) fn pot_members(d: &OnePlanarDrawing) -> (Vec<usize>, Vec<usize>) {
    let tv = d.true_vertices();
    let delta = tv.iter().map(|&v| d.degree(v)).max().unwrap_or(0);
    let at = |k: usize| tv.iter().copied().filter(|&v| d.degree(v) == k).collect();
    (at(delta), at(3))
}

/// `u` is a tri-neighbor of `v`: both true and adjacent, `d(v) = 4`, and
/// one of the two faces along `uv` is a triangle whose third corner is true.
fn tri_neighbor(d: &OnePlanarDrawing, idx: &FaceIndex, u: usize, v: usize) -> bool {
    if d.is_false(u) || d.is_false(v) || d.degree(v) != 4 {
        return false;
    }
    let Some(i) = d.position(u, v) else { return false };
    let j = d.position(v, u).expect("symmetric rotation");
    [idx.dart_face[u][i], idx.dart_face[v][j]].into_iter().any(|f| {
        let walk = &idx.faces[f].walk;
        walk.len() == 3 && walk.iter().all(|&t| !d.is_false(t))
    })
}

fn r3_amount(d: &OnePlanarDrawing, idx: &FaceIndex, u: usize, v: usize) -> Q {
    if tri_neighbor(d, idx, u, v) {
        q(1, 3) + q(1, 12)
    } else {
        q(1, 3)
    }
}

/// What `u` does at the crossing `w`, as `(rule, to, amount, via)` entries.
fn crossing_transfers(d: &OnePlanarDrawing, w: usize, u: usize) -> Vec<(Rule, usize, Q, bool)> {
    let Some((v, x, y)) = d.crossing_roles(w, u) else {
        return Vec::new();
    };
    let du = d.degree(u);
    let dv = d.degree(v);
    let (ux, uy) = (d.has_edge(u, x), d.has_edge(u, y));
    let count = ux as u8 + uy as u8;
    let mut out = Vec::new();
    if du >= 9 {
        match count {
            0 => {
                if small(d, v) {
                    out.push((Rule::R4, v, q(1, 3), true));
                }
            }
            1 => {
                out.push((Rule::R5, w, q(1, 4), false));
                if dv <= 4 {
                    out.push((Rule::R5, v, q(1, 3), true));
                }
            }
            _ => {
                let r6 = (d.has_edge(v, x) && small(d, y)) || (d.has_edge(v, y) && small(d, x));
                let (rule, to_w, to_v) = if r6 {
                    (Rule::R6, q(3, 4), q(1, 24))
                } else {
                    (Rule::R7, q(2, 3), q(1, 8))
                };
                out.push((rule, w, to_w, false));
                if dv <= 4 {
                    out.push((rule, v, to_v, true));
                }
            }
        }
    } else if du == 8 {
        match count {
            2 => out.push((Rule::R8, w, q(1, 2), false)),
            1 => out.push((Rule::R9, w, q(1, 12), false)),
            _ => {}
        }
    }
    out
}

pub(super) fn all_transfers(d: &OnePlanarDrawing) -> Vec<Transfer> {
    let idx = d.face_index();
    let mut out = Vec::new();

    // R1
    for (fi, f) in idx.faces.iter().enumerate() {
        if f.degree() < 4 {
            continue;
        }
        let mut mult: BTreeMap<usize, i64> = BTreeMap::new();
        for &v in &f.walk {
            if small(d, v) {
                *mult.entry(v).or_default() += 1;
            }
        }
        let total: i64 = mult.values().sum();
        if total == 0 {
            continue;
        }
        let share = q(2 * f.degree() as i64 - 6, total);
        for (v, k) in mult {
            out.push(Transfer {
                rule: Rule::R1,
                from: ChargeElement::Face(fi),
                to: ChargeElement::Vertex(v),
                amount: share * k,
                via: None,
            });
        }
    }

    // R2
    let (v_delta, v_three) = pot_members(d);
    if !v_three.is_empty() {
        for &u in &v_delta {
            out.push(Transfer {
                rule: Rule::R2,
                from: ChargeElement::Vertex(u),
                to: ChargeElement::Pot,
                amount: q(1, 2),
                via: None,
            });
        }
        for &y in &v_three {
            out.push(Transfer {
                rule: Rule::R2,
                from: ChargeElement::Pot,
                to: ChargeElement::Vertex(y),
                amount: Q::from(1),
                via: None,
            });
        }
    }

    // R3
    for u in d.true_vertices() {
        let mut nbrs: Vec<usize> = d.rotation(u).to_vec();
        nbrs.sort_unstable();
        for v in nbrs {
            if !d.is_false(v) && small(d, v) {
                out.push(Transfer {
                    rule: Rule::R3,
                    from: ChargeElement::Vertex(u),
                    to: ChargeElement::Vertex(v),
                    amount: r3_amount(d, &idx, u, v),
                    via: None,
                });
            }
        }
    }

    // R4..R9
    let mut crossing = Vec::new();
    for w in d.false_vertices() {
        let mut ends = d.rotation(w).to_vec();
        ends.sort_unstable();
        for u in ends {
            for (rule, to, amount, through) in crossing_transfers(d, w, u) {
                crossing.push(Transfer {
                    rule,
                    from: ChargeElement::Vertex(u),
                    to: ChargeElement::Vertex(to),
                    amount,
                    via: through.then_some(w),
                });
            }
        }
    }
    crossing.sort_by_key(|t| t.rule);
    out.extend(crossing);
    out
}

/// Re-derives whether `t` is an instance of its rule, reading the rule
/// statements directly: for R5..R9 the two ends of the crossed edge are
/// tried under both names.
pub fn transfer_is_justified(d: &OnePlanarDrawing, t: &Transfer) -> bool {
    use ChargeElement::*;
    let idx = d.face_index();
    let n = d.num_vertices();
    let positive = t.amount > Q::from(0);
    match (t.rule, t.from, t.to) {
        (Rule::R1, Face(fi), Vertex(v)) => {
            let Some(f) = idx.faces.get(fi) else { return false };
            let smalls = f.walk.iter().filter(|&&x| small(d, x)).count() as i64;
            let here = f.walk.iter().filter(|&&x| x == v).count() as i64;
            f.degree() >= 4
                && small(d, v)
                && here > 0
                && t.amount == q((2 * f.degree() as i64 - 6) * here, smalls)
        }
        (Rule::R2, Vertex(u), Pot) => {
            let (dl, th) = pot_members(d);
            !th.is_empty() && dl.contains(&u) && t.amount == q(1, 2)
        }
        (Rule::R2, Pot, Vertex(y)) => {
            let (_, th) = pot_members(d);
            th.contains(&y) && t.amount == Q::from(1)
        }
        (Rule::R3, Vertex(u), Vertex(v)) => {
            u < n
                && v < n
                && !d.is_false(u)
                && !d.is_false(v)
                && d.has_edge(u, v)
                && small(d, v)
                && t.amount == r3_amount(d, &idx, u, v)
        }
        (rule, Vertex(u), Vertex(to)) if positive => {
            let w = t.via.unwrap_or(to);
            if w >= n || !d.is_false(w) || u >= n || d.is_false(u) {
                return false;
            }
            let Some((v, a, b)) = d.crossing_roles(w, u) else {
                return false;
            };
            if t.via.is_some() && to != v {
                return false;
            }
            let du = d.degree(u);
            let dv = d.degree(v);
            let e = |p: usize, q: usize| d.has_edge(p, q);
            let to_w = t.via.is_none();
            let labelings = [(a, b), (b, a)];
            let ok = |(x, y): (usize, usize)| match rule {
                Rule::R4 => du >= 9 && !e(u, x) && !e(u, y) && small(d, v) && !to_w && t.amount == q(1, 3),
                Rule::R5 => {
                    du >= 9
                        && !e(u, x)
                        && e(u, y)
                        && if to_w {
                            t.amount == q(1, 4)
                        } else {
                            dv <= 4 && t.amount == q(1, 3)
                        }
                }
                Rule::R6 => {
                    du >= 9
                        && e(u, x)
                        && e(u, y)
                        && e(v, x)
                        && small(d, y)
                        && if to_w {
                            t.amount == q(3, 4)
                        } else {
                            dv <= 4 && t.amount == q(1, 24)
                        }
                }
                Rule::R7 => {
                    // "either vx ∉ E or y not small" under every labeling,
                    // otherwise R6 applies
                    let r6_somewhere = labelings.iter().any(|&(x2, y2)| e(v, x2) && small(d, y2));
                    du >= 9
                        && e(u, x)
                        && e(u, y)
                        && !r6_somewhere
                        && if to_w {
                            t.amount == q(2, 3)
                        } else {
                            dv <= 4 && t.amount == q(1, 8)
                        }
                }
                Rule::R8 => du == 8 && e(u, x) && e(u, y) && to_w && t.amount == q(1, 2),
                Rule::R9 => du == 8 && e(u, x) && !e(u, y) && to_w && t.amount == q(1, 12),
                _ => false,
            };
            labelings.into_iter().any(ok)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn degree_eight_sends_half() {
        let (d, u, w) = fixtures::degree_eight_at_crossing();
        let ts: Vec<_> = all_transfers(&d)
            .into_iter()
            .filter(|t| t.rule >= Rule::R4)
            .collect();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rule, Rule::R8);
        assert_eq!(ts[0].from, ChargeElement::Vertex(u));
        assert_eq!(ts[0].to, ChargeElement::Vertex(w));
        assert_eq!(ts[0].amount, q(1, 2));
        assert!(transfer_is_justified(&d, &ts[0]));
    }

    #[test]
    fn forged_transfers_are_rejected() {
        let (d, u, w) = fixtures::degree_eight_at_crossing();
        let mut t = Transfer {
            rule: Rule::R9,
            from: ChargeElement::Vertex(u),
            to: ChargeElement::Vertex(w),
            amount: q(1, 12),
            via: None,
        };
        assert!(!transfer_is_justified(&d, &t));
        t.rule = Rule::R8;
        t.amount = q(1, 3);
        assert!(!transfer_is_justified(&d, &t));
    }
}

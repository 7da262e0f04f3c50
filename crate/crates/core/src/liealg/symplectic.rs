//! sp(2) and the orthosymplectic superalgebras osp(2s|2).

use super::presentation::{combo_add_scaled, Combo, Presentation};
use crate::error::Result;
use crate::exactcore::{Parity, GR};

/// The (2|2s)-graded index `X, P, th1, pi1, .., ths, pis` and its graded
/// symplectic form `J_{XP} = -J_{PX} = 1`, `J_{th_i pi_i} = J_{pi_i th_i} = 1`.
#[derive(Clone, Debug)]
pub struct SuperIndex {
    pub s: usize,
}

impl SuperIndex {
    pub fn len(&self) -> usize {
        2 + 2 * self.s
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_odd(&self, a: usize) -> bool {
        a >= 2
    }

    pub fn name(&self, a: usize) -> String {
        match a {
            0 => "X".into(),
            1 => "P".into(),
            _ if a.is_multiple_of(2) => format!("th{}", a / 2),
            _ => format!("pi{}", a / 2),
        }
    }

    pub fn form(&self, a: usize, b: usize) -> i64 {
        match (a, b) {
            (0, 1) => 1,
            (1, 0) => -1,
            _ if a >= 2 && b >= 2 && a / 2 == b / 2 && a != b => 1,
            _ => 0,
        }
    }

    /// Graded-symmetric pairs `a <= b`, excluding odd diagonals.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in a..self.len() {
                if a == b && self.is_odd(a) {
                    continue;
                }
                out.push((a, b));
            }
        }
        out
    }
}

fn sgn(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// osp(2s|2) on graded-symmetric generators `t(a,b)`, with
/// `[t_ab, t_cd} = i( J_bc t_ad + (-1)^{|b||c|} J_ac t_bd
///   + (-1)^{(|a|+|b|)|c|} J_bd t_ca + (-1)^{(|a|+|b|)|c|+|b||d|} J_ad t_cb )`.
/// For `s = 0` this is sp(2).
pub fn osp(s: usize) -> Result<Presentation> {
    let idx = SuperIndex { s };
    let pairs = idx.pairs();
    let pos = |a: usize, b: usize| -> Option<(usize, i64)> {
        // t_ba = (-1)^{|a||b|} t_ab
        let (x, y, sign) = if a <= b {
            (a, b, 1)
        } else {
            (b, a, sgn(idx.is_odd(a) && idx.is_odd(b)))
        };
        pairs.iter().position(|&p| p == (x, y)).map(|k| (k, sign))
    };
    let labels: Vec<String> = pairs
        .iter()
        .map(|&(a, b)| format!("t({},{})", idx.name(a), idx.name(b)))
        .collect();
    let parities = pairs
        .iter()
        .map(|&(a, b)| Parity::from_odd(idx.is_odd(a) != idx.is_odd(b)))
        .collect();
    let name = if s == 0 { "sp(2)".to_string() } else { format!("osp({}|2)", 2 * s) };
    Presentation::from_upper(&name, labels, parities, |i, j| {
        let (a, b) = pairs[i];
        let (c, d) = pairs[j];
        let o = |x: usize| idx.is_odd(x);
        let terms = [
            (idx.form(b, c), 1, a, d),
            (idx.form(a, c), sgn(o(b) && o(c)), b, d),
            (idx.form(b, d), sgn((o(a) != o(b)) && o(c)), c, a),
            (idx.form(a, d), sgn((o(a) != o(b)) && o(c)) * sgn(o(b) && o(d)), c, b),
        ];
        let mut out = Combo::new();
        for (f, sign, x, y) in terms {
            if f == 0 {
                continue;
            }
            if let Some((k, s2)) = pos(x, y) {
                let c = &GR::i() * &GR::from_int(f * sign * s2);
                combo_add_scaled(&mut out, &c, &Combo::from([(k, GR::from_int(1))]));
            }
        }
        out
    })
}

pub fn sp2() -> Result<Presentation> {
    osp(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(sp2().unwrap().dim(), 3);
        let o1 = osp(1).unwrap();
        assert_eq!(o1.dim(), 8);
        assert_eq!((0..8).filter(|&k| o1.parity(k).is_odd()).count(), 4);
        assert_eq!(osp(2).unwrap().dim(), 17);
    }

    #[test]
    fn jacobi() {
        for s in 0..=2 {
            let g = osp(s).unwrap();
            assert!(g.check_antisymmetry().is_empty());
            assert!(g.check_jacobi().is_empty(), "osp({s})");
        }
    }

    #[test]
    fn sp2_relations() {
        let g = sp2().unwrap();
        let xx = g.index_of("t(X,X)").unwrap();
        let xp = g.index_of("t(X,P)").unwrap();
        let pp = g.index_of("t(P,P)").unwrap();
        assert_eq!(g.basis_bracket(xx, pp), &Combo::from([(xp, &GR::i() * &GR::from_int(4))]));
        assert_eq!(g.basis_bracket(xp, xx), &Combo::from([(xx, &GR::i() * &GR::from_int(-2))]));
    }
}

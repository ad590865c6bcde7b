use std::fmt;

use super::GroupError;

/// A letter `g^±1`: generator index and whether it is inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

pub type Word = Vec<Letter>;

pub fn invert_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

/// Cancels adjacent `g g^-1` pairs.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cyclic reduction.
fn cyclic_reduce(w: &[Letter]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == w[w.len() - 1].inv() {
        w.pop();
        w.remove(0);
    }
    w
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitelyPresentedGroup {
    generators: Vec<String>,
    relators: Vec<Word>,
}

/// Result of eliminating generators: the smaller presentation and, for each
/// original generator, a word in the remaining ones.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub group: FinitelyPresentedGroup,
    pub substitution: Vec<Word>,
}

impl FinitelyPresentedGroup {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        for w in &relators {
            if let Some(l) = w.iter().find(|l| l.generator >= generators.len()) {
                return Err(GroupError::Presentation(format!("letter uses generator {}", l.generator)));
            }
        }
        Ok(FinitelyPresentedGroup { generators, relators })
    }

    /// `<ρ0, ρ1, ρ2 | ρ1², ρ0ρ1ρ2>`.
    pub fn cartographic() -> Self {
        let r = |g| Letter::new(g);
        Self::new(
            vec!["rho0".into(), "rho1".into(), "rho2".into()],
            vec![vec![r(1), r(1)], vec![r(0), r(1), r(2)]],
        )
        .expect("valid presentation")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Parses `rho0*rho1^-1*rho2^2` against the generator names.
    pub fn parse_word(&self, text: &str) -> Result<Word, GroupError> {
        let mut w = Vec::new();
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(w);
        }
        for token in text.split('*') {
            let token = token.trim();
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<i32>()
                        .map_err(|_| GroupError::Presentation(format!("bad exponent in {token:?}")))?,
                ),
                None => (token, 1),
            };
            let g = self
                .generators
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| GroupError::Presentation(format!("unknown generator {name:?}")))?;
            let l = Letter {
                generator: g,
                inverse: exp < 0,
            };
            w.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(w)
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|l| {
                let name = &self.generators[l.generator];
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Generators `g` with a relator `g²` (or `g⁻²`).
    pub fn involutions(&self) -> Vec<bool> {
        let mut inv = vec![false; self.generators.len()];
        for w in &self.relators {
            if w.len() == 2 && w[0] == w[1] {
                inv[w[0].generator] = true;
            }
        }
        inv
    }

    /// Tietze elimination: while some relator contains a generator exactly
    /// once, solve for it (the highest-numbered such generator) and substitute.
    pub fn eliminate_generators(&self) -> Reduction {
        let n = self.generators.len();
        let mut subst: Vec<Option<Word>> = vec![None; n];
        let mut relators: Vec<Word> = self.relators.iter().map(|w| cyclic_reduce(w)).collect();
        loop {
            let mut pick = None;
            'outer: for (ri, w) in relators.iter().enumerate() {
                for g in (0..n).rev() {
                    let hits: Vec<usize> =
                        (0..w.len()).filter(|&i| w[i].generator == g).collect();
                    if hits.len() == 1 {
                        pick = Some((ri, g, hits[0]));
                        break 'outer;
                    }
                }
            }
            let Some((ri, g, pos)) = pick else { break };
            let w = relators.remove(ri);
            // u·g^e·v = 1  ⇒  g^e = u⁻¹·v⁻¹
            let mut value = invert_word(&w[..pos]);
            value.extend(invert_word(&w[pos + 1..]));
            if w[pos].inverse {
                value = invert_word(&value);
            }
            let value = free_reduce(&value);
            let replace = |word: &[Letter]| -> Word {
                let mut out = Vec::new();
                for &l in word {
                    if l.generator == g {
                        if l.inverse {
                            out.extend(invert_word(&value));
                        } else {
                            out.extend(value.iter().copied());
                        }
                    } else {
                        out.push(l);
                    }
                }
                free_reduce(&out)
            };
            for r in relators.iter_mut() {
                *r = cyclic_reduce(&replace(r));
            }
            for s in subst.iter_mut().flatten() {
                *s = replace(s);
            }
            subst[g] = Some(value);
            relators.retain(|r| !r.is_empty());
        }
        let kept: Vec<usize> = (0..n).filter(|&g| subst[g].is_none()).collect();
        let renumber = |w: &[Letter]| -> Word {
            w.iter()
                .map(|l| Letter {
                    generator: kept.iter().position(|&k| k == l.generator).expect("kept generator"),
                    inverse: l.inverse,
                })
                .collect()
        };
        let substitution = (0..n)
            .map(|g| match &subst[g] {
                Some(w) => renumber(w),
                None => vec![Letter::new(kept.iter().position(|&k| k == g).expect("kept"))],
            })
            .collect();
        let group = FinitelyPresentedGroup {
            generators: kept.iter().map(|&g| self.generators[g].clone()).collect(),
            relators: relators.iter().map(|r| renumber(r)).collect(),
        };
        Reduction { group, substitution }
    }
}

impl fmt::Display for FinitelyPresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|w| self.format_word(w)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartographic_reduces_to_two_generators() {
        let g = FinitelyPresentedGroup::cartographic();
        let red = g.eliminate_generators();
        assert_eq!(red.group.generators(), ["rho0", "rho1"]);
        assert_eq!(red.group.to_string(), "< rho0, rho1 | rho1*rho1 >");
        assert_eq!(red.group.involutions(), [false, true]);
        assert_eq!(red.group.format_word(&red.substitution[2]), "rho1^-1*rho0^-1");
        assert_eq!(red.group.format_word(&red.substitution[0]), "rho0");
    }

    #[test]
    fn words_round_trip() {
        let g = FinitelyPresentedGroup::cartographic();
        let w = g.parse_word("rho0*rho1^-2*rho2").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(g.format_word(&w), "rho0*rho1^-1*rho1^-1*rho2");
        assert!(g.parse_word("rho3").is_err());
        assert_eq!(free_reduce(&g.parse_word("rho0*rho0^-1*rho1").unwrap()).len(), 1);
    }

    #[test]
    fn inverted_occurrence_is_solved() {
        let r = |g| Letter::new(g);
        let g = FinitelyPresentedGroup::new(
            vec!["a".into(), "b".into()],
            vec![vec![r(0), r(1).inv()]],
        )
        .unwrap();
        let red = g.eliminate_generators();
        assert_eq!(red.group.generators(), ["a"]);
        assert!(red.group.relators().is_empty());
        assert_eq!(red.group.format_word(&red.substitution[1]), "a");
    }
}

use crate::algebra::Monomial;

/// Exponent trie answering "does some stored monomial divide `m`?".
#[derive(Debug, Clone, Default)]
pub(crate) struct DivisorTrie {
    nvars: usize,
    // node -> sorted (exponent, child) edges; leaves sit at depth `nvars`
    nodes: Vec<Vec<(u32, usize)>>,
    len: usize,
}

impl DivisorTrie {
    pub fn new(nvars: usize) -> Self {
        DivisorTrie { nvars, nodes: vec![Vec::new()], len: 0 }
    }

    pub fn from_monomials<'a>(nvars: usize, ms: impl IntoIterator<Item = &'a Monomial>) -> Self {
        let mut t = DivisorTrie::new(nvars);
        for m in ms {
            t.insert(m);
        }
        t
    }

    pub fn insert(&mut self, m: &Monomial) {
        let mut node = 0;
        for &e in m.exps() {
            let pos = self.nodes[node].binary_search_by_key(&e, |(k, _)| *k);
            node = match pos {
                Ok(i) => self.nodes[node][i].1,
                Err(i) => {
                    let child = self.nodes.len();
                    self.nodes.push(Vec::new());
                    self.nodes[node].insert(i, (e, child));
                    child
                }
            };
        }
        self.len += 1;
    }

    pub fn has_divisor_of(&self, m: &Monomial) -> bool {
        if self.len == 0 {
            return false;
        }
        let exps = m.exps();
        let mut stack = vec![(0usize, 0usize)];
        while let Some((node, depth)) = stack.pop() {
            if depth == self.nvars {
                return true;
            }
            for &(e, child) in &self.nodes[node] {
                if e > exps[depth] {
                    break;
                }
                stack.push((child, depth + 1));
            }
        }
        false
    }
}

/// Removes duplicates and non-minimal elements, returning a sorted list.
pub(crate) fn minimalize(nvars: usize, mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    ms.dedup();
    let mut trie = DivisorTrie::new(nvars);
    let mut kept = Vec::new();
    for m in ms {
        if !trie.has_divisor_of(&m) {
            trie.insert(&m);
            kept.push(m);
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trie_divisibility() {
        let ms = [Monomial::new(vec![2, 0]), Monomial::new(vec![0, 3])];
        let t = DivisorTrie::from_monomials(2, ms.iter());
        assert!(t.has_divisor_of(&Monomial::new(vec![2, 1])));
        assert!(t.has_divisor_of(&Monomial::new(vec![1, 3])));
        assert!(!t.has_divisor_of(&Monomial::new(vec![1, 2])));
    }

    #[test]
    fn minimalize_prunes() {
        let got = minimalize(2, vec![Monomial::new(vec![2, 0]), Monomial::new(vec![3, 0]), Monomial::new(vec![0, 1]), Monomial::new(vec![2, 0])]);
        assert_eq!(got, vec![Monomial::new(vec![0, 1]), Monomial::new(vec![2, 0])]);
    }
}

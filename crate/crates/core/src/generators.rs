//! Named graph families.
//!
//! Families are addressed with the mini-grammar `family[:p1[,p2...]]`,
//! e.g. `petersen`, `cycle:5`, `paley:13`, `complete_multipartite:3,3,3`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Complete(usize),
    /// Part sizes.
    CompleteMultipartite(Vec<usize>),
    /// Complement of `p` disjoint edges.
    CocktailParty(usize),
    Petersen,
    /// Line graph of `K_n`.
    Triangular(usize),
    /// Line graph of `K_{n,n}`.
    Rook(usize),
    /// Prime `q ≡ 1 (mod 4)`.
    Paley(usize),
    Clebsch,
    Shrikhande,
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match self {
            Family::Cycle(n) => cycle(*n),
            Family::Complete(n) => complete(*n),
            Family::CompleteMultipartite(parts) => complete_multipartite(parts),
            Family::CocktailParty(p) => cocktail_party(*p),
            Family::Petersen => Ok(petersen()),
            Family::Triangular(n) => triangular(*n),
            Family::Rook(n) => rook(*n),
            Family::Paley(q) => paley(*q),
            Family::Clebsch => Ok(clebsch()),
            Family::Shrikhande => Ok(shrikhande()),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::CompleteMultipartite(_) => "complete_multipartite",
            Family::CocktailParty(_) => "cocktail_party",
            Family::Petersen => "petersen",
            Family::Triangular(_) => "triangular",
            Family::Rook(_) => "rook",
            Family::Paley(_) => "paley",
            Family::Clebsch => "clebsch",
            Family::Shrikhande => "shrikhande",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name.trim(), Some(args)),
            None => (s.trim(), None),
        };
        let params: Vec<usize> = match args {
            None => Vec::new(),
            Some(a) => a
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::input(format!("`{t}` is not a non-negative integer")))
                })
                .collect::<Result<_>>()?,
        };
        let one = |params: &[usize]| match params {
            [p] => Ok(*p),
            _ => Err(Error::input(format!("family `{name}` takes exactly one parameter"))),
        };
        let none = |params: &[usize]| {
            if params.is_empty() {
                Ok(())
            } else {
                Err(Error::input(format!("family `{name}` takes no parameters")))
            }
        };
        Ok(match name {
            "cycle" => Family::Cycle(one(&params)?),
            "complete" => Family::Complete(one(&params)?),
            "complete_multipartite" => Family::CompleteMultipartite(params),
            "cocktail_party" => Family::CocktailParty(one(&params)?),
            "petersen" => none(&params).map(|_| Family::Petersen)?,
            "triangular" => Family::Triangular(one(&params)?),
            "rook" => Family::Rook(one(&params)?),
            "paley" => Family::Paley(one(&params)?),
            "clebsch" => none(&params).map(|_| Family::Clebsch)?,
            "shrikhande" => none(&params).map(|_| Family::Shrikhande)?,
            other => return Err(Error::input(format!("unknown graph family `{other}`"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<usize> = match self {
            Family::Cycle(n)
            | Family::Complete(n)
            | Family::CocktailParty(n)
            | Family::Triangular(n)
            | Family::Rook(n)
            | Family::Paley(n) => vec![*n],
            Family::CompleteMultipartite(parts) => parts.clone(),
            Family::Petersen | Family::Clebsch | Family::Shrikhande => vec![],
        };
        f.write_str(self.name())?;
        if !params.is_empty() {
            let joined: Vec<String> = params.iter().map(ToString::to_string).collect();
            write!(f, ":{}", joined.join(","))?;
        }
        Ok(())
    }
}

/// Parses a `family[:params]` string and builds the graph.
pub fn generate(spec: &str) -> Result<Graph> {
    spec.parse::<Family>()?.generate()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_fn(n, |x, y| y - x == 1 || (x == 0 && y == n - 1))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::input("complete graph needs n >= 1"));
    }
    Graph::from_fn(n, |_, _| true)
}

/// Vertices of part `i` are consecutive; vertices in different parts are
/// adjacent.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::input(
            "complete_multipartite needs a non-empty list of positive part sizes",
        ));
    }
    let part_of: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &size)| std::iter::repeat_n(i, size))
        .collect();
    Graph::from_fn(part_of.len(), |x, y| part_of[x] != part_of[y])
}

pub fn cocktail_party(p: usize) -> Result<Graph> {
    if p < 2 {
        return Err(Error::input(format!("cocktail_party needs p >= 2, got {p}")));
    }
    Graph::from_fn(2 * p, |x, y| x / 2 != y / 2)
}

/// 2-subsets of `0..m` in lexicographic order.
fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m)
        .flat_map(|a| ((a + 1)..m).map(move |b| (a, b)))
        .collect()
}

/// Kneser graph K(5,2): 2-subsets of a 5-set, adjacent iff disjoint.
pub fn petersen() -> Graph {
    let v = pairs(5);
    Graph::from_fn(v.len(), |x, y| {
        let (a, b) = v[x];
        let (c, d) = v[y];
        a != c && a != d && b != c && b != d
    })
    .expect("10 vertices")
}

/// `L(K_n)`: 2-subsets of an n-set, adjacent iff they intersect.
pub fn triangular(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::input(format!("triangular needs n >= 2, got {n}")));
    }
    let v = pairs(n);
    Graph::from_fn(v.len(), |x, y| {
        let (a, b) = v[x];
        let (c, d) = v[y];
        a == c || a == d || b == c || b == d
    })
}

/// `L(K_{n,n})`: cells of an n×n board, adjacent iff in the same row or
/// column. Cell `(i, j)` is vertex `i*n + j`.
pub fn rook(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::input(format!("rook needs n >= 2, got {n}")));
    }
    Graph::from_fn(n * n, |x, y| x / n == y / n || x % n == y % n)
}

pub(crate) fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Paley graph on `Z_q`: `x ~ y` iff `x - y` is a nonzero square mod `q`.
/// Only prime `q ≡ 1 (mod 4)` is supported.
pub fn paley(q: usize) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::input(format!("paley needs a prime q, got {q}")));
    }
    if q % 4 != 1 {
        return Err(Error::input(format!("paley needs q ≡ 1 (mod 4), got {q}")));
    }
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    Graph::from_fn(q, |x, y| square[y - x])
}

/// Vertices `F_2^4`; adjacent iff the difference has Hamming weight 1 or 4.
pub fn clebsch() -> Graph {
    Graph::from_fn(16, |x, y| matches!((x ^ y).count_ones(), 1 | 4)).expect("16 vertices")
}

/// Cayley graph of `Z_4 × Z_4` with connection set `±(1,0), ±(0,1), ±(1,1)`.
/// Vertex `(a, b)` is `4a + b`.
pub fn shrikhande() -> Graph {
    Graph::from_fn(16, |x, y| {
        let da = (y / 4 + 4 - x / 4) % 4;
        let db = (y % 4 + 4 - x % 4) % 4;
        matches!((da, db), (1, 0) | (3, 0) | (0, 1) | (0, 3) | (1, 1) | (3, 3))
    })
    .expect("16 vertices")
}

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use super::Graph;

/// Length of a shortest cycle. `Acyclic` compares greater than every finite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }

    pub fn is_at_least(self, g: usize) -> bool {
        self >= Girth::Finite(g)
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Girth::Finite(a), Girth::Finite(b)) => a.cmp(b),
            (Girth::Finite(_), Girth::Acyclic) => Ordering::Less,
            (Girth::Acyclic, Girth::Finite(_)) => Ordering::Greater,
            (Girth::Acyclic, Girth::Acyclic) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Acyclic => serializer.serialize_str("acyclic"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct GirthVisitor;

        impl Visitor<'_> for GirthVisitor {
            type Value = Girth;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a cycle length or the string \"acyclic\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Girth, E> {
                Ok(Girth::Finite(v as usize))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Girth, E> {
                if v == "acyclic" {
                    Ok(Girth::Acyclic)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        deserializer.deserialize_any(GirthVisitor)
    }
}

pub fn girth(g: &Graph) -> Girth {
    match shortest_cycle(g) {
        Some(c) => Girth::Finite(c.len()),
        None => Girth::Acyclic,
    }
}

/// A shortest cycle as a vertex sequence, or `None` for a forest.
///
/// Runs a BFS from every root in increasing order. A non-tree edge `xy`
/// met from root `v` closes a walk of length `d(v,x) + d(v,y) + 1` that
/// contains a cycle, so the minimum over all roots is the girth, and any
/// such walk of girth length is itself a simple cycle. Shells that cannot
/// beat the best length found so far are not expanded. The cycle returned
/// is the first one of minimum length met in this scan.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut best_len = usize::MAX;
    let mut best = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();

    for root in 0..n {
        for &v in &touched {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);

        while let Some(x) = queue.pop_front() {
            // every walk closed from here is at least 2 d(x) + 1 long
            if 2 * dist[x] + 1 >= best_len {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    if len < best_len {
                        best_len = len;
                        best = Some(trace_cycle(&parent, root, x, y));
                    }
                }
            }
        }
        if best_len == 3 {
            break;
        }
    }
    best
}

fn trace_cycle(parent: &[usize], root: usize, x: usize, y: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut path = vec![v];
        while v != root {
            v = parent[v];
            path.push(v);
        }
        path
    };
    // root ... x, then y ... (excluding root)
    let mut cycle: Vec<usize> = path_to_root(x).into_iter().rev().collect();
    let mut back = path_to_root(y);
    back.pop();
    cycle.extend(back);
    cycle
}

//! Distance of an estimated front to a sampled reference front.
//!
//! Each estimated point is paired with its nearest reference point (Euclidean
//! distance in objective space). `front_error` is the sum of the squared
//! distances and `generational_distance` is `sqrt(front_error) / N`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{all_finite, Scalar};

const LEAF_SIZE: usize = 16;

#[derive(Debug, Clone)]
struct Node {
    start: usize,
    end: usize,
    /// Child node indices; `None` for leaves.
    children: Option<(usize, usize)>,
}

/// Sampled reference front stored in a bucketed k-d tree with bounding boxes,
/// for exact nearest-point queries.
#[derive(Debug, Clone)]
pub struct ReferenceFront<T> {
    /// Row-major, `k` values per point, grouped so each node owns a contiguous range.
    flat: Vec<T>,
    k: usize,
    nodes: Vec<Node>,
    /// Per node: `k` minima followed by `k` maxima.
    boxes: Vec<T>,
}

impl<T: Scalar> ReferenceFront<T> {
    pub fn new<P: AsRef<[T]>>(points: &[P]) -> Result<Self> {
        let first = points
            .first()
            .ok_or_else(|| Error::invalid("reference front must not be empty"))?;
        let k = first.as_ref().len();
        if k == 0 {
            return Err(Error::invalid("reference points must not be empty"));
        }
        for p in points {
            let p = p.as_ref();
            if p.len() != k || !all_finite(p) {
                return Err(Error::invalid(
                    "reference points must share one length and be finite",
                ));
            }
        }
        let mut flat = Vec::with_capacity(points.len() * k);
        for p in points {
            flat.extend_from_slice(p.as_ref());
        }
        let mut front = Self {
            flat,
            k,
            nodes: Vec::new(),
            boxes: Vec::new(),
        };
        let mut order: Vec<usize> = (0..points.len()).collect();
        front.build(&mut order, 0);
        let mut sorted = Vec::with_capacity(front.flat.len());
        for &i in &order {
            sorted.extend_from_slice(&front.flat[i * k..(i + 1) * k]);
        }
        front.flat = sorted;
        Ok(front)
    }

    /// Builds the subtree over `order` (which covers `[offset, offset + len)`)
    /// and returns its node index.
    fn build(&mut self, order: &mut [usize], offset: usize) -> usize {
        let k = self.k;
        let mut lo = vec![T::infinity(); k];
        let mut hi = vec![T::neg_infinity(); k];
        for &i in order.iter() {
            for a in 0..k {
                let v = self.flat[i * k + a];
                lo[a] = lo[a].min(v);
                hi[a] = hi[a].max(v);
            }
        }
        let id = self.nodes.len();
        self.nodes.push(Node {
            start: offset,
            end: offset + order.len(),
            children: None,
        });
        self.boxes.extend_from_slice(&lo);
        self.boxes.extend_from_slice(&hi);
        if order.len() <= LEAF_SIZE {
            return id;
        }
        let axis = (0..k)
            .max_by(|&a, &b| {
                (hi[a] - lo[a])
                    .partial_cmp(&(hi[b] - lo[b]))
                    .unwrap_or(Ordering::Equal)
            })
            .unwrap_or(0);
        let mid = order.len() / 2;
        let flat = &self.flat;
        order.select_nth_unstable_by(mid, |&a, &b| {
            flat[a * k + axis]
                .partial_cmp(&flat[b * k + axis])
                .unwrap_or(Ordering::Equal)
        });
        let (left, right) = order.split_at_mut(mid);
        let l = self.build(left, offset);
        let r = self.build(right, offset + mid);
        self.nodes[id].children = Some((l, r));
        id
    }

    pub fn len(&self) -> usize {
        self.flat.len() / self.k
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn objective_count(&self) -> usize {
        self.k
    }

    /// Points in storage order.
    pub fn points(&self) -> impl Iterator<Item = &[T]> + '_ {
        self.flat.chunks_exact(self.k)
    }

    /// Squared distance from `q` to the closest reference point.
    pub fn nearest_sq_distance(&self, q: &[T]) -> Result<T> {
        if q.len() != self.k || !all_finite(q) {
            return Err(Error::invalid(format!(
                "query must be a finite {}-objective vector",
                self.k
            )));
        }
        let mut best = T::infinity();
        self.search(0, q, &mut best);
        Ok(best)
    }

    /// Squared distance from `q` to the bounding box of `node`.
    fn box_sq_distance(&self, node: usize, q: &[T]) -> T {
        let b = &self.boxes[node * 2 * self.k..(node + 1) * 2 * self.k];
        let (lo, hi) = b.split_at(self.k);
        let mut acc = T::zero();
        for a in 0..self.k {
            let gap = if q[a] < lo[a] {
                lo[a] - q[a]
            } else if q[a] > hi[a] {
                q[a] - hi[a]
            } else {
                T::zero()
            };
            acc = acc + gap * gap;
        }
        acc
    }

    fn search(&self, node: usize, q: &[T], best: &mut T) {
        let n = &self.nodes[node];
        match n.children {
            None => {
                for p in self.flat[n.start * self.k..n.end * self.k].chunks_exact(self.k) {
                    let d = sq_dist(p, q);
                    if d < *best {
                        *best = d;
                    }
                }
            }
            Some((l, r)) => {
                let (dl, dr) = (self.box_sq_distance(l, q), self.box_sq_distance(r, q));
                let ordered = if dl <= dr { [(l, dl), (r, dr)] } else { [(r, dr), (l, dl)] };
                for (child, bound) in ordered {
                    if bound < *best {
                        self.search(child, q, best);
                    }
                }
            }
        }
    }

    pub fn front_error<P: AsRef<[T]>>(&self, estimated: &[P]) -> Result<T> {
        if estimated.is_empty() {
            return Err(Error::invalid("estimated front must not be empty"));
        }
        let mut total = T::zero();
        for e in estimated {
            total = total + self.nearest_sq_distance(e.as_ref())?;
        }
        Ok(total)
    }

    pub fn generational_distance<P: AsRef<[T]>>(&self, estimated: &[P]) -> Result<T> {
        let ef = self.front_error(estimated)?;
        Ok(ef.sqrt() / T::lit(estimated.len() as f64))
    }
}

#[inline]
fn sq_dist<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (&x, &y)| acc + (x - y) * (x - y))
}

/// `E_f`: sum over estimated points of the squared distance to the nearest
/// reference point.
pub fn front_error<T: Scalar, P: AsRef<[T]>, Q: AsRef<[T]>>(
    estimated: &[P],
    reference: &[Q],
) -> Result<T> {
    ReferenceFront::new(reference)?.front_error(estimated)
}

/// `D_g = sqrt(E_f) / N` with `N` the number of estimated points.
pub fn generational_distance<T: Scalar, P: AsRef<[T]>, Q: AsRef<[T]>>(
    estimated: &[P],
    reference: &[Q],
) -> Result<T> {
    ReferenceFront::new(reference)?.generational_distance(estimated)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_fronts_have_zero_error() {
        let f = vec![vec![0.0, 1.0], vec![0.5, 0.3], vec![1.0, 0.0]];
        assert_eq!(front_error(&f, &f).unwrap(), 0.0);
        assert_eq!(generational_distance(&f, &f).unwrap(), 0.0);
    }

    #[test]
    fn single_pair_examples() {
        assert_eq!(front_error(&[[0.0, 2.0]], &[[0.0, 1.0]]).unwrap(), 1.0);
        let d: f64 = generational_distance(&[[3.0, 4.0]], &[[0.0, 0.0]]).unwrap();
        assert_eq!(d, 5.0);
    }

    #[test]
    fn four_points_at_one_tenth() {
        let reference = vec![vec![0.0, 0.0], vec![10.0, 0.0], vec![20.0, 0.0], vec![30.0, 0.0]];
        let est = vec![vec![0.0, 0.1], vec![10.0, 0.1], vec![20.0, -0.1], vec![30.1, 0.0]];
        let dg: f64 = generational_distance(&est, &reference).unwrap();
        assert!((dg - 0.05).abs() < 1e-12);
    }

    #[test]
    fn empty_inputs_are_errors() {
        let empty: Vec<Vec<f64>> = vec![];
        assert!(front_error(&empty, &[[0.0, 1.0]]).is_err());
        assert!(front_error(&[[0.0, 1.0]], &empty).is_err());
        assert!(generational_distance(&[[0.0, 1.0, 2.0]], &[[0.0, 1.0]]).is_err());
    }

    #[test]
    fn nearest_crosses_the_split_plane() {
        let reference = ReferenceFront::new(&[[0.49, 5.0], [0.6, 0.0]]).unwrap();
        assert!((reference.nearest_sq_distance(&[0.5, 0.0]).unwrap() - 0.01f64).abs() < 1e-12);
    }
}

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use udg_graph::Graph;

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    rng: ChaCha8Rng,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn link(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    fn twins(&mut self) -> usize {
        *[1, 1, 1, 2, 3, 4].choose(&mut self.rng).unwrap()
    }

    fn maybe_pendants(&mut self, v: usize, p: f64) {
        if self.rng.gen_bool(p) {
            for _ in 0..self.twins() {
                let x = self.fresh();
                self.link(v, x);
            }
        }
    }

    /// Legs at a spine vertex: leaves and leg-with-foot twins.
    fn legs(&mut self, s: usize) {
        self.maybe_pendants(s, 0.3);
        if self.rng.gen_bool(0.45) {
            for _ in 0..self.twins() {
                let l = self.fresh();
                let f = self.fresh();
                self.link(s, l);
                self.link(l, f);
            }
        }
    }

    /// Spine continuing from `v` with `m - 1` new vertices; returns the far end.
    fn spine(&mut self, v: usize, m: usize, legs_at_start: bool) -> usize {
        if legs_at_start {
            self.legs(v);
        }
        let mut cur = v;
        for _ in 1..m {
            let s = self.fresh();
            self.link(cur, s);
            self.legs(s);
            cur = s;
        }
        cur
    }

    /// Strip whose first left edge contains `glue` (if given). Returns the
    /// last right edge `(b_2, b)`.
    fn strip(&mut self, glue: Option<usize>, blocks: usize) -> (usize, usize) {
        let (mut a, mut a1) = match glue {
            Some(v) => {
                let u = self.fresh();
                if self.rng.gen_bool(0.5) {
                    (v, u)
                } else {
                    (u, v)
                }
            }
            None => (self.fresh(), self.fresh()),
        };
        self.maybe_pendants(a, 0.25);
        self.maybe_pendants(a1, 0.25);
        let mut right = (a, a1);
        for i in 0..blocks {
            let k = *[2, 2, 2, 3, 3, 4, 5].choose(&mut self.rng).unwrap();
            let b = self.fresh();
            let b1 = self.fresh();
            self.link(a, a1);
            self.link(a1, b1);
            self.link(b1, b);
            let mut b2 = 0;
            for j in 1..k {
                let x = self.fresh();
                let y = self.fresh();
                self.link(a, x);
                self.link(x, y);
                self.link(y, b);
                if j == 1 {
                    b2 = y;
                }
            }
            self.maybe_pendants(b2, 0.25);
            self.maybe_pendants(b, 0.25);
            right = (b2, b);
            if i + 1 < blocks {
                (a, a1) = if self.rng.gen_bool(0.5) { (b2, b) } else { (b, b2) };
            }
        }
        right
    }
}

/// Random connected member of the class with at most `size` vertices
/// (at least one), deterministic in `seed`.
pub fn generate_random_member(seed: u64, size: usize) -> Graph {
    let size = size.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let mut b = Builder {
            n: 0,
            edges: Vec::new(),
            rng: ChaCha8Rng::seed_from_u64(rng.gen()),
        };
        let max_strips = (size / 10).min(3);
        let t = if max_strips > 0 && b.rng.gen_bool(0.8) {
            b.rng.gen_range(1..=max_strips)
        } else {
            0
        };
        if t == 0 {
            let s = b.fresh();
            let m = b.rng.gen_range(1..=(size / 3).max(1));
            b.spine(s, m, true);
        } else {
            let mut glue = None;
            if b.rng.gen_bool(0.4) {
                let s = b.fresh();
                let m = b.rng.gen_range(1..=3);
                glue = Some(b.spine(s, m, true));
            }
            for i in 0..t {
                let blocks = b.rng.gen_range(1..=3);
                let (b2, bb) = b.strip(glue, blocks);
                let v = if b.rng.gen_bool(0.5) { b2 } else { bb };
                let more = i + 1 < t;
                if more || b.rng.gen_bool(0.4) {
                    let m = if more && b.rng.gen_bool(0.4) {
                        1
                    } else {
                        b.rng.gen_range(2..=4)
                    };
                    glue = Some(b.spine(v, m, true));
                }
            }
        }
        if b.n <= size {
            let mut perm: Vec<usize> = (0..b.n).collect();
            perm.shuffle(&mut rng);
            let edges: Vec<(usize, usize)> = b.edges.iter().map(|&(x, y)| (perm[x], perm[y])).collect();
            return Graph::from_edge_list(b.n, &edges).expect("generator edges are valid");
        }
    }
    Graph::path(size.min(4))
}

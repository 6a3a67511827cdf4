use super::spec::{GroupElement, GroupSpec};

/// Multiplication, inversion and order tables over element indices.
///
/// Index order coincides with the lexicographic element order, so comparing
/// index tuples compares element tuples.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    spec: GroupSpec,
    size: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

impl CayleyTable {
    pub fn new(spec: GroupSpec) -> Self {
        let size = spec.order();
        let elems: Vec<GroupElement> = spec.elements().collect();
        let mut mul = vec![0u32; size * size];
        for (x, &ex) in elems.iter().enumerate() {
            let row = &mut mul[x * size..(x + 1) * size];
            for (y, &ey) in elems.iter().enumerate() {
                row[y] = spec.index_of(spec.multiply(ex, ey)) as u32;
            }
        }
        let inv = elems.iter().map(|&e| spec.index_of(spec.invert(e)) as u32).collect();
        let mut orders = vec![0u32; size];
        for x in 0..size {
            let mut y = x as u32;
            let mut k = 1;
            while y != 0 {
                y = mul[y as usize * size + x];
                k += 1;
            }
            orders[x] = k;
        }
        CayleyTable { spec, size, mul, inv, orders }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.mul[x as usize * self.size + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    #[inline]
    pub fn order_of(&self, x: u32) -> u32 {
        self.orders[x as usize]
    }

    /// g x g⁻¹
    #[inline]
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv[g as usize])
    }

    pub fn pow(&self, x: u32, k: i64) -> u32 {
        let ord = self.order_of(x) as i64;
        let e = k.rem_euclid(ord);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn product(&self, xs: &[u32]) -> u32 {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    /// u v u⁻¹ v⁻¹
    pub fn commutator(&self, u: u32, v: u32) -> u32 {
        self.mul(self.mul(u, v), self.mul(self.inv(u), self.inv(v)))
    }

    pub fn index(&self, e: GroupElement) -> u32 {
        self.spec.index_of(e) as u32
    }

    pub fn element(&self, idx: u32) -> GroupElement {
        self.spec.element_at(idx as usize)
    }

    pub fn elements_of_order(&self, k: u32) -> Vec<u32> {
        (0..self.size as u32).filter(|&x| self.orders[x as usize] == k).collect()
    }

    /// Sorted element indices of ⟨gens⟩.
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.size];
        let mut members = vec![0u32];
        seen[0] = true;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Whether `gens` generate the whole group; stops as soon as the count is reached.
    pub fn generates(&self, gens: &[u32]) -> bool {
        let mut seen = vec![false; self.size];
        let mut members = Vec::with_capacity(self.size);
        members.push(0u32);
        seen[0] = true;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    members.push(y);
                    if members.len() == self.size {
                        return true;
                    }
                }
            }
        }
        members.len() == self.size
    }
}

/// Conjugacy classes together with the data needed to move any element to
/// its class representative.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    /// class index of every element
    pub class_of: Vec<u32>,
    /// members of each class, sorted; the first member is the representative
    pub classes: Vec<Vec<u32>>,
    /// `to_rep[x]` conjugates x onto its representative
    pub to_rep: Vec<u32>,
    /// centralizer of each class representative
    pub centralizers: Vec<Vec<u32>>,
}

impl ConjugacyData {
    pub fn new(table: &CayleyTable) -> Self {
        let size = table.size();
        let unset = u32::MAX;
        let mut class_of = vec![unset; size];
        let mut to_rep = vec![unset; size];
        let mut classes = Vec::new();
        let mut centralizers = Vec::new();
        for x in 0..size as u32 {
            if class_of[x as usize] != unset {
                continue;
            }
            // x is the smallest unvisited element, hence the class minimum.
            let id = classes.len() as u32;
            let mut members = Vec::new();
            let mut centralizer = Vec::new();
            for g in 0..size as u32 {
                let y = table.conj(g, x);
                if y == x {
                    centralizer.push(g);
                }
                if class_of[y as usize] == unset {
                    class_of[y as usize] = id;
                    to_rep[y as usize] = table.inv(g);
                    members.push(y);
                }
            }
            members.sort_unstable();
            classes.push(members);
            centralizers.push(centralizer);
        }
        ConjugacyData { class_of, classes, to_rep, centralizers }
    }

    pub fn representative(&self, x: u32) -> u32 {
        self.classes[self.class_of[x as usize] as usize][0]
    }

    pub fn class_size(&self, x: u32) -> usize {
        self.classes[self.class_of[x as usize] as usize].len()
    }

    pub fn center(&self) -> Vec<u32> {
        self.classes.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect()
    }
}

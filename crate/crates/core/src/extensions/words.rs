use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::actions::GeneratingVector;
use crate::error::{Error, Result};
use crate::geometry::Signature;
use crate::group::{embeddings, generated_subgroup, images_permutation, CayleyTable, GroupElement, GroupSpec, Subgroup};

/// Affine exponent c + l·L + m·M + lr·L·R in the table parameters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exponent {
    pub c: i64,
    pub l: i64,
    pub m: i64,
    pub lr: i64,
}

impl Exponent {
    pub const fn constant(c: i64) -> Self {
        Exponent { c, l: 0, m: 0, lr: 0 }
    }

    pub fn is_constant(&self) -> bool {
        self.l == 0 && self.m == 0 && self.lr == 0
    }

    pub fn eval(&self, p: Option<WordParams>) -> Result<i64> {
        if self.is_constant() {
            return Ok(self.c);
        }
        let p = p.ok_or_else(|| Error::MissingParameters(self.to_string()))?;
        Ok(self.c + self.l * p.l + self.m * p.m + self.lr * p.l * p.r)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (coef, sym) in [(self.l, "l"), (self.m, "m"), (self.lr, "lr")] {
            match coef {
                0 => {}
                1 => terms.push(sym.to_string()),
                -1 => terms.push(format!("-{sym}")),
                k => terms.push(format!("{k}{sym}")),
            }
        }
        if self.c != 0 || terms.is_empty() {
            terms.insert(0, self.c.to_string());
        }
        let s = terms.join("+").replace("+-", "-");
        if terms.len() > 1 {
            write!(f, "({s})")
        } else {
            f.write_str(&s)
        }
    }
}

/// A word in the canonical generators y₁, y₂, … of a Fuchsian group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Word {
    /// y_{k+1}
    Gen(usize),
    Seq(Vec<Word>),
    Pow(Box<Word>, Exponent),
}

impl Word {
    pub fn y(k: usize) -> Word {
        Word::Gen(k)
    }

    pub fn seq(parts: impl IntoIterator<Item = Word>) -> Word {
        Word::Seq(parts.into_iter().collect())
    }

    pub fn pow(self, e: i64) -> Word {
        Word::Pow(Box::new(self), Exponent::constant(e))
    }

    pub fn pow_expr(self, e: Exponent) -> Word {
        Word::Pow(Box::new(self), e)
    }

    pub fn inverse(self) -> Word {
        self.pow(-1)
    }

    pub fn is_parametric(&self) -> bool {
        match self {
            Word::Gen(_) => false,
            Word::Seq(parts) => parts.iter().any(Word::is_parametric),
            Word::Pow(w, e) => !e.is_constant() || w.is_parametric(),
        }
    }

    /// Largest generator index used, plus one.
    pub fn arity(&self) -> usize {
        match self {
            Word::Gen(k) => k + 1,
            Word::Seq(parts) => parts.iter().map(Word::arity).max().unwrap_or(0),
            Word::Pow(w, _) => w.arity(),
        }
    }

    pub fn eval(&self, spec: GroupSpec, ys: &[GroupElement], params: Option<WordParams>) -> Result<GroupElement> {
        Ok(match self {
            Word::Gen(k) => *ys.get(*k).ok_or(Error::IndexOutOfRange { index: *k, len: ys.len() })?,
            Word::Seq(parts) => {
                let mut acc = spec.identity();
                for w in parts {
                    acc = spec.multiply(acc, w.eval(spec, ys, params)?);
                }
                acc
            }
            Word::Pow(w, e) => spec.power(w.eval(spec, ys, params)?, e.eval(params)?),
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Gen(k) => write!(f, "y{}", k + 1),
            Word::Seq(parts) => parts.iter().try_for_each(|w| write!(f, "{w}")),
            Word::Pow(w, e) => match **w {
                Word::Gen(_) => write!(f, "{w}^{e}"),
                _ => write!(f, "({w})^{e}"),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordParams {
    pub l: i64,
    pub m: i64,
    pub r: i64,
}

/// Generators of a finite-index Fuchsian subgroup written in the canonical
/// generators of the larger group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordTable {
    pub name: String,
    pub super_signature: Signature,
    pub sub_signature: Signature,
    /// Periods of the word images, in word order.
    pub sub_arrangement: Vec<u32>,
    pub index: usize,
    pub words: Vec<Word>,
    pub parametric: bool,
}

impl WordTable {
    fn new(name: &str, sup: &str, sub: &str, sub_arrangement: &[u32], words: Vec<Word>) -> Self {
        let parametric = words.iter().any(Word::is_parametric);
        WordTable {
            name: name.to_string(),
            super_signature: sup.parse().expect("static signature"),
            sub_signature: sub.parse().expect("static signature"),
            sub_arrangement: sub_arrangement.to_vec(),
            index: 2,
            words,
            parametric,
        }
    }
}

fn y(k: usize) -> Word {
    Word::y(k)
}

/// The six tables: T1 for order 10q, T2a/T2b/T3 for order 12q, T4a/T4b for the λ = 3 family.
pub fn builtin_word_tables() -> Vec<WordTable> {
    let u = || Word::seq([y(1), y(0)]);
    let w = || Word::seq([u().pow_expr(Exponent { m: -1, ..Default::default() }), y(3)]);
    let x1 = || Word::seq([u().pow_expr(Exponent { l: 1, ..Default::default() }), w().pow(2)]);
    let x2 = || Word::seq([u().pow_expr(Exponent { c: -1, lr: -1, ..Default::default() }), w().pow(5)]);
    vec![
        WordTable::new(
            "T1",
            "0;2,5,10",
            "0;5,5,5",
            &[5, 5, 5],
            vec![Word::seq([y(0), y(2)]).inverse(), y(1), y(2).pow(2)],
        ),
        WordTable::new(
            "T2a",
            "0;2,6,6",
            "0;3,6,6",
            &[3, 6, 6],
            vec![y(1).pow(2), y(2), Word::seq([y(1).pow(2), y(2)]).inverse()],
        ),
        WordTable::new(
            "T2b",
            "0;2,6,6",
            "0;3,6,6",
            &[3, 6, 6],
            vec![y(2).pow(2), y(1), Word::seq([y(2).pow(2), y(1)]).inverse()],
        ),
        WordTable::new(
            "T3",
            "0;2,6,6",
            "0;2,2,3,3",
            &[2, 2, 3, 3],
            vec![Word::seq([y(0), y(1).pow(2), y(2).pow(2)]).inverse(), y(0), y(1).pow(2), y(2).pow(2)],
        ),
        WordTable::new("T4a", "0;2,2,3,3", "0;3,3,3,3", &[3, 3, 3, 3], vec![y(2), y(3).pow(2), y(3), y(2).pow(2)]),
        WordTable::new(
            "T4b",
            "0;2,2,3,3",
            "0;3,3,3,3",
            &[3, 3, 3, 3],
            vec![x1(), x2(), w(), Word::seq([x1(), x2(), w()]).inverse()],
        ),
    ]
}

pub fn word_table(name: &str) -> Option<WordTable> {
    builtin_word_tables().into_iter().find(|t| t.name == name)
}

/// Images of a table's words under a supergroup action, still inside the supergroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Restriction {
    pub table: String,
    pub sub_signature: Signature,
    pub images: Vec<GroupElement>,
    /// Subgroup generated by the images.
    pub subgroup: Subgroup,
}

impl Restriction {
    pub fn super_group(&self) -> GroupSpec {
        self.subgroup.parent()
    }

    pub fn index(&self) -> usize {
        self.subgroup.index()
    }

    /// The same action written in `target`, through some isomorphism from the image subgroup.
    pub fn transport(&self, target: GroupSpec) -> Result<GeneratingVector> {
        let table = CayleyTable::new(self.super_group());
        let iso = Isomorphism::find(&table, &self.subgroup, target)?;
        let images = self.images.iter().map(|&x| iso.apply(x)).collect();
        GeneratingVector::new(target, self.sub_signature.clone(), vec![], images)
    }
}

/// An isomorphism from a subgroup of a supergroup onto a target group.
#[derive(Clone, Debug)]
pub(crate) struct Isomorphism {
    target: GroupSpec,
    map: HashMap<GroupElement, GroupElement>,
}

impl Isomorphism {
    pub(crate) fn find(table: &CayleyTable, subgroup: &Subgroup, target: GroupSpec) -> Result<Self> {
        let fail = || Error::NoIsomorphism(target.name());
        if subgroup.order() != target.order() {
            return Err(fail());
        }
        let allowed = subgroup.indices();
        // An embedding target → supergroup landing in the subgroup, inverted.
        let &(a, t, z) = embeddings(table, target, &allowed, true).first().ok_or_else(fail)?;
        let images = images_permutation(table, target, a, t, z).ok_or_else(fail)?;
        let map = images
            .into_iter()
            .enumerate()
            .map(|(k, img)| (table.element(img), target.element_at(k)))
            .collect();
        Ok(Isomorphism { target, map })
    }

    pub(crate) fn target(&self) -> GroupSpec {
        self.target
    }

    pub(crate) fn apply(&self, x: GroupElement) -> GroupElement {
        self.map[&x]
    }
}

/// Evaluates a table on a supergroup action and checks the images against the sub-signature.
pub fn evaluate_word_table(
    table: &WordTable,
    super_vector: &GeneratingVector,
    params: Option<WordParams>,
) -> Result<Restriction> {
    if table.parametric && params.is_none() {
        return Err(Error::MissingParameters(table.name.clone()));
    }
    let spec = super_vector.group();
    let expected = table.super_signature.periods();
    let found = super_vector.arrangement();
    if super_vector.signature().orbit_genus() != table.super_signature.orbit_genus() {
        return Err(Error::InvalidSignature(format!(
            "{} needs orbit genus {}",
            table.name,
            table.super_signature.orbit_genus()
        )));
    }
    for k in 0..expected.len().max(found.len()) {
        let (e, f) = (expected.get(k).copied().unwrap_or(0), found.get(k).copied().unwrap_or(0));
        if e != f {
            return Err(Error::OrderMismatch { position: k + 1, expected: e, found: f });
        }
    }
    let ys = super_vector.period_images();
    let mut images = Vec::with_capacity(table.words.len());
    for (k, w) in table.words.iter().enumerate() {
        let x = w.eval(spec, ys, params)?;
        let order = spec.element_order(x);
        if order != table.sub_arrangement[k] {
            return Err(Error::OrderMismatch { position: k + 1, expected: table.sub_arrangement[k], found: order });
        }
        images.push(x);
    }
    let product = images.iter().fold(spec.identity(), |acc, &x| spec.multiply(acc, x));
    if product != spec.identity() {
        return Err(Error::InvalidVector(format!("{} images do not multiply to 1", table.name)));
    }
    let subgroup = generated_subgroup(spec, &images);
    Ok(Restriction { table: table.name.clone(), sub_signature: table.sub_signature.clone(), images, subgroup })
}

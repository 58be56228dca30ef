//! Signed-permutation models of the classical types.
//!
//! `W(A_{n-1})` is the symmetric group on `1..n`, `W(B_n)` the group of signed
//! permutations of `1..n` and `W(D_n)` its subgroup with an even number of
//! sign changes. Products act on the right: `i(ab) = (i a) b`.
//!
//! Generators, in Coxeter-system order:
//! - `A_{n-1}`: `s_1, ..., s_{n-1}` with `s_i = (i, i+1)`;
//! - `B_n`: `t = (1)^-, s_1, ..., s_{n-1}`;
//! - `D_n`: `u = (1,-2), s_1, ..., s_{n-1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ctype::{CoxeterType, Family};
use crate::error::{CoxeterError, Result};
use crate::system::{CoxeterSystem, Element};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    /// `images[i - 1] = w(i)`.
    images: Vec<i32>,
}

/// A cycle in normalized form: smallest absolute value first and positive.
/// A negative cycle `(i_1, ..., i_k)^-` stands for `(i_1, ..., i_k, -i_1, ..., -i_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub entries: Vec<i32>,
    pub negative: bool,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i32).collect() }
    }

    pub fn from_images(images: Vec<i32>) -> Result<Self> {
        let n = images.len() as i32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v == 0 || v.abs() > n || std::mem::replace(&mut seen[(v.abs() - 1) as usize], true) {
                return Err(CoxeterError::Parse(format!("{images:?} is not a signed permutation")));
            }
        }
        Ok(SignedPermutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }
    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `w(i)` for `i` in `±{1..n}`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.images[(i.abs() - 1) as usize];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        SignedPermutation { images: self.images.iter().map(|&v| other.apply(v)).collect() }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            let src = i as i32 + 1;
            images[(v.abs() - 1) as usize] = if v < 0 { -src } else { src };
        }
        SignedPermutation { images }
    }

    /// `x^-1 self x`.
    pub fn conjugate_by(&self, x: &SignedPermutation) -> SignedPermutation {
        x.inverse().compose(self).compose(x)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    /// Membership in `W(D_n)`.
    pub fn is_even(&self) -> bool {
        self.negative_count().is_multiple_of(2)
    }

    pub fn is_unsigned(&self) -> bool {
        self.negative_count() == 0
    }

    pub fn cycles(&self) -> Vec<Cycle> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n as i32 {
            if seen[(start - 1) as usize] {
                continue;
            }
            let mut entries = vec![start];
            seen[(start - 1) as usize] = true;
            let mut cur = self.apply(start);
            let negative = loop {
                if cur == start {
                    break false;
                }
                if cur == -start {
                    break true;
                }
                seen[(cur.abs() - 1) as usize] = true;
                entries.push(cur);
                cur = self.apply(cur);
            };
            out.push(Cycle { entries, negative });
        }
        out
    }

    pub fn cycle_type(&self) -> DoublePartition {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for c in self.cycles() {
            if c.negative {
                minus.push(c.entries.len());
            } else {
                plus.push(c.entries.len());
            }
        }
        plus.sort_unstable();
        minus.sort_unstable();
        DoublePartition { plus, minus, primed: false }
    }

    /// Parity of the number of negative entries over all positive cycles.
    /// For elements of `W(D_n)` with only positive cycles of even length this
    /// separates the two `W(D_n)`-classes sharing a cycle type.
    pub fn cycle_sign_parity(&self) -> bool {
        self.cycles()
            .iter()
            .filter(|c| !c.negative)
            .map(|c| c.entries.iter().filter(|&&e| e < 0).count())
            .sum::<usize>()
            % 2
            == 1
    }

    /// Conjugacy-class label in the given classical type.
    pub fn class_label(&self, ctype: CoxeterType) -> DoublePartition {
        let mut label = self.cycle_type();
        if ctype.family() == Family::D && label.is_split_in_d() {
            label.primed = self.cycle_sign_parity();
        }
        label
    }

    /// Parse cycle notation, padding with fixed points up to degree `n`.
    pub fn parse_with_degree(s: &str, n: usize) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        let max = cycles.iter().flat_map(|(c, _)| c.iter()).map(|v| v.unsigned_abs() as usize).max().unwrap_or(0);
        if max > n {
            return Err(CoxeterError::Parse(format!("entry {max} exceeds degree {n}")));
        }
        let mut images: Vec<i32> = vec![0; n];
        for (entries, negative) in &cycles {
            let k = entries.len();
            for j in 0..k {
                let (a, mut b) = (entries[j], entries[(j + 1) % k]);
                if *negative && j + 1 == k {
                    b = -b;
                }
                // w(a) = b, hence w(|a|) = sign(a) b
                let idx = (a.abs() - 1) as usize;
                if images[idx] != 0 {
                    return Err(CoxeterError::Parse(format!("{} appears twice", a.abs())));
                }
                images[idx] = if a < 0 { -b } else { b };
            }
        }
        for (i, v) in images.iter_mut().enumerate() {
            if *v == 0 {
                *v = i as i32 + 1;
            }
        }
        Self::from_images(images)
    }
}

fn parse_cycles(s: &str) -> Result<Vec<(Vec<i32>, bool)>> {
    let s = s.replace('⁻', "-").replace("^-", "-").replace(char::is_whitespace, "");
    let bad = || CoxeterError::Parse(format!("malformed cycle notation {s:?}"));
    let mut out = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = body.find(')').ok_or_else(bad)?;
        let entries = body[..close]
            .split(',')
            .map(|t| t.parse::<i32>().ok().filter(|&v| v != 0).ok_or_else(bad))
            .collect::<Result<Vec<i32>>>()?;
        rest = &body[close + 1..];
        let negative = rest.starts_with('-');
        if negative {
            rest = &rest[1..];
        }
        out.push((entries, negative));
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))?;
        if self.negative {
            write!(f, "-")?;
        }
        Ok(())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = CoxeterError;
    fn from_str(s: &str) -> Result<Self> {
        let max = parse_cycles(s)?.iter().flat_map(|(c, _)| c.clone()).map(|v| v.unsigned_abs() as usize).max();
        Self::parse_with_degree(s, max.unwrap_or(0))
    }
}

/// Class label `(λ⁺, λ⁻)` of a classical Coxeter group; both parts weakly
/// increasing. `primed` selects the second of a split pair of `D_n` classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoublePartition {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    #[serde(default)]
    pub primed: bool,
}

fn is_even_partition(p: &[usize]) -> bool {
    p.iter().all(|&m| m % 2 == 0)
}

impl DoublePartition {
    pub fn new(mut plus: Vec<usize>, mut minus: Vec<usize>) -> Result<Self> {
        if plus.iter().chain(&minus).any(|&m| m == 0) {
            return Err(CoxeterError::MalformedPartition("parts must be positive".into()));
        }
        plus.sort_unstable();
        minus.sort_unstable();
        Ok(DoublePartition { plus, minus, primed: false })
    }

    /// A plain partition (type A label).
    pub fn partition(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts, Vec::new())
    }

    pub fn primed(mut self) -> Self {
        self.primed = true;
        self
    }

    pub fn size(&self) -> usize {
        self.plus.iter().sum::<usize>() + self.minus.iter().sum::<usize>()
    }

    /// `λ⁻ = ∅` and `λ⁺` even: the `W(B_n)`-class splits in `W(D_n)`.
    pub fn is_split_in_d(&self) -> bool {
        self.minus.is_empty() && is_even_partition(&self.plus)
    }

    pub fn plus_is_even(&self) -> bool {
        is_even_partition(&self.plus)
    }
    pub fn minus_is_even(&self) -> bool {
        is_even_partition(&self.minus)
    }

    /// A single odd positive part together with a nonempty even `λ⁻` with an
    /// even number of parts.
    pub fn is_non_compliant(&self) -> bool {
        self.plus.len() == 1
            && self.plus[0] % 2 == 1
            && !self.minus.is_empty()
            && self.minus_is_even()
            && self.minus.len().is_multiple_of(2)
    }

    /// Multiplicities `a_m` of the positive parts.
    pub fn plus_multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut a = BTreeMap::new();
        for &m in &self.plus {
            *a.entry(m).or_insert(0) += 1;
        }
        a
    }

    /// Block offsets `o_m = |λ⁻| + a_1 + 2a_2 + ... + (m-1)a_{m-1}` for each
    /// positive part size `m` (the `|λ⁻|` term vanishes in type A).
    pub fn block_offsets(&self) -> BTreeMap<usize, usize> {
        let mut o = self.minus.iter().sum::<usize>();
        let mut out = BTreeMap::new();
        for (m, a) in self.plus_multiplicities() {
            out.insert(m, o);
            o += m * a;
        }
        out
    }

    pub fn validate_for(&self, ctype: CoxeterType) -> Result<()> {
        let bad = |msg: String| Err(CoxeterError::MalformedPartition(format!("{self} for {ctype}: {msg}")));
        let Some(n) = ctype.classical_degree() else {
            return bad("not a classical type".into());
        };
        if self.plus.iter().chain(&self.minus).any(|&m| m == 0) {
            return bad("parts must be positive".into());
        }
        if !self.plus.windows(2).all(|w| w[0] <= w[1]) || !self.minus.windows(2).all(|w| w[0] <= w[1]) {
            return bad("parts must be weakly increasing".into());
        }
        if self.size() != n {
            return bad(format!("size {} differs from {n}", self.size()));
        }
        match ctype.family() {
            Family::A if !self.minus.is_empty() => bad("type A has no negative cycles".into()),
            Family::A | Family::B if self.primed => bad("only type D has primed classes".into()),
            Family::D if self.minus.len() % 2 == 1 => bad("odd number of negative cycles".into()),
            Family::D if self.primed && !self.is_split_in_d() => bad("primed label needs λ⁻ empty and λ⁺ even".into()),
            _ => Ok(()),
        }
    }

    /// Compact form with concatenated digits, e.g. `(112,23)`.
    pub fn compact(&self) -> String {
        let join = |p: &[usize]| p.iter().map(|m| m.to_string()).collect::<String>();
        format!("({},{}){}", join(&self.plus), join(&self.minus), if self.primed { "'" } else { "" })
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &[usize]| p.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "(({}),({})){}", join(&self.plus), join(&self.minus), if self.primed { "'" } else { "" })
    }
}

impl FromStr for DoublePartition {
    type Err = CoxeterError;

    /// Accepts `((1,1,2),(2,3))`, `(1,1,2),(2,3)`, `(2,2),()`, a single group
    /// `(1,1,2,4)` for a plain partition, and a trailing `'` for primed.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || CoxeterError::MalformedPartition(format!("cannot parse {s:?}"));
        let mut t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let primed = t.ends_with('\'');
        if primed {
            t.pop();
        }
        let mut groups = top_level_groups(&t).ok_or_else(bad)?;
        if groups.len() == 1 && groups[0].starts_with('(') {
            groups = top_level_groups(&groups[0]).ok_or_else(bad)?;
        }
        let parse_parts = |g: &str| -> Result<Vec<usize>> {
            if g.is_empty() || g == "∅" {
                return Ok(Vec::new());
            }
            g.split(',').map(|x| x.parse::<usize>().map_err(|_| bad())).collect()
        };
        let (plus, minus) = match groups.as_slice() {
            [p] => (parse_parts(p)?, Vec::new()),
            [p, m] => (parse_parts(p)?, parse_parts(m)?),
            _ => return Err(bad()),
        };
        let mut dp = DoublePartition::new(plus, minus)?;
        dp.primed = primed;
        Ok(dp)
    }
}

/// Contents of the top-level parenthesized groups of `s`, which must consist
/// of such groups separated by optional commas.
fn top_level_groups(s: &str) -> Option<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                if depth > 0 {
                    cur.push(c);
                }
                depth += 1;
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
                if depth == 0 {
                    out.push(std::mem::take(&mut cur));
                } else {
                    cur.push(c);
                }
            }
            ',' if depth == 0 => {}
            _ if depth == 0 => return None,
            _ => cur.push(c),
        }
    }
    (depth == 0 && !out.is_empty()).then_some(out)
}

/// Partitions of `n` as weakly increasing sequences, in lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for m in min..=n {
            if n - m == 0 || n - m >= m {
                cur.push(m);
                rec(n - m, m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Conjugacy-class labels of a classical group.
pub fn class_labels(ctype: CoxeterType) -> Vec<DoublePartition> {
    let Some(n) = ctype.classical_degree() else { return Vec::new() };
    let mut out = Vec::new();
    match ctype.family() {
        Family::A => {
            for p in partitions(n) {
                out.push(DoublePartition { plus: p, minus: Vec::new(), primed: false });
            }
        }
        _ => {
            for k in 0..=n {
                for minus in partitions(k) {
                    for plus in partitions(n - k) {
                        let dp = DoublePartition { plus, minus: minus.clone(), primed: false };
                        if ctype.family() == Family::D && dp.minus.len() % 2 == 1 {
                            continue;
                        }
                        if ctype.family() == Family::D && dp.is_split_in_d() {
                            out.push(dp.clone().primed());
                        }
                        out.push(dp);
                    }
                }
            }
            out.sort();
        }
    }
    out
}

fn range_check(n: usize, offset: usize, size: usize, degree: usize) -> Result<()> {
    if offset + n > degree {
        return Err(CoxeterError::RangeOverflow { offset, size, degree });
    }
    Ok(())
}

/// `s(o, m)`: swaps `o+j` with `o+m+j` for `j = 1..m`.
pub fn block_swap(degree: usize, o: usize, m: usize) -> Result<SignedPermutation> {
    range_check(2 * m, o, m, degree)?;
    let mut w = SignedPermutation::identity(degree);
    for j in 0..m {
        w.images.swap(o + j, o + m + j);
    }
    Ok(w)
}

/// `r(o, m)`: reverses `o+1..o+m`.
pub fn block_reverse(degree: usize, o: usize, m: usize) -> Result<SignedPermutation> {
    range_check(m, o, m, degree)?;
    let mut w = SignedPermutation::identity(degree);
    w.images[o..o + m].reverse();
    Ok(w)
}

/// `t(o, m)`: negates `o+1..o+m`.
pub fn block_negate(degree: usize, o: usize, m: usize) -> Result<SignedPermutation> {
    range_check(m, o, m, degree)?;
    let mut w = SignedPermutation::identity(degree);
    for v in &mut w.images[o..o + m] {
        *v = -*v;
    }
    Ok(w)
}

/// The minimal-length representative `w_λ`: negative cycles on `1..|λ⁻|`,
/// then positive cycles on consecutive blocks, each of the form
/// `(o+1, ..., o+m)`. For a primed `D_n` label the first cycle starts with
/// `-1` instead of `1`.
pub fn w_lambda(ctype: CoxeterType, lambda: &DoublePartition) -> Result<SignedPermutation> {
    lambda.validate_for(ctype)?;
    let n = ctype.classical_degree().expect("validated classical");
    let mut images = vec![0i32; n];
    let mut o = 0usize;
    let mut place = |m: usize, negative: bool, images: &mut Vec<i32>| {
        for j in 0..m {
            images[o + j] = (o + (j + 1) % m) as i32 + 1;
        }
        if negative {
            images[o + m - 1] = -images[o + m - 1];
        }
        o += m;
    };
    for &m in &lambda.minus {
        place(m, true, &mut images);
    }
    for &m in &lambda.plus {
        place(m, false, &mut images);
    }
    let mut w = SignedPermutation::from_images(images)?;
    if lambda.primed {
        // (-1, 2, ..., m): conjugate the first cycle by the sign change of 1
        // and 2, keeping the element inside W(D_n)
        let m = lambda.plus[0];
        let mut images = w.images.clone();
        images[0] = -images[0];
        images[m - 1] = -images[m - 1];
        w = SignedPermutation::from_images(images)?;
    }
    Ok(w)
}

/// The signed permutation of Coxeter generator `i` (0-based).
pub fn generator(ctype: CoxeterType, i: usize) -> Result<SignedPermutation> {
    let n = ctype.classical_degree().ok_or_else(|| CoxeterError::Unsupported(format!("{ctype} is not classical")))?;
    if i >= ctype.rank() {
        return Err(CoxeterError::Parse(format!("generator {} out of range for {ctype}", i + 1)));
    }
    let mut w = SignedPermutation::identity(n);
    match (ctype.family(), i) {
        (Family::A, _) => w.images.swap(i, i + 1),
        (Family::B, 0) => w.images[0] = -1,
        (Family::D, 0) => {
            w.images[0] = -2;
            w.images[1] = -1;
        }
        _ => w.images.swap(i - 1, i),
    }
    Ok(w)
}

/// A word `g_1 ... g_k` (0-based generators) whose product is `w`.
pub fn word_of(ctype: CoxeterType, w: &SignedPermutation) -> Result<Vec<usize>> {
    let n = ctype
        .classical_degree()
        .ok_or_else(|| CoxeterError::Unsupported(format!("{ctype} is not classical")))?;
    if w.degree() != n {
        return Err(CoxeterError::Parse(format!("degree {} does not match {ctype}", w.degree())));
    }
    match ctype.family() {
        Family::A if !w.is_unsigned() => {
            return Err(CoxeterError::Unsupported("sign changes do not occur in type A".into()))
        }
        Family::D if !w.is_even() => return Err(CoxeterError::ParityViolation),
        _ => {}
    }
    // Left multiplication by s_j swaps positions j, j+1; by t negates position
    // 1; by u sends (a, b, ...) to (-b, -a, ...). Reduce to the identity.
    let shift = usize::from(ctype.family() != Family::A);
    let mut img = w.images.clone();
    let mut word = Vec::new();
    loop {
        if let Some(j) = (0..n - 1).find(|&j| img[j] > img[j + 1]) {
            img.swap(j, j + 1);
            word.push(j + shift);
            continue;
        }
        match ctype.family() {
            Family::B if img[0] < 0 => {
                img[0] = -img[0];
                word.push(0);
            }
            Family::D if img[0] < 0 => {
                let (a, b) = (img[0], img[1]);
                img[0] = -b;
                img[1] = -a;
                word.push(0);
            }
            _ => break,
        }
    }
    Ok(word)
}

pub fn to_element(w: &SignedPermutation, sys: &CoxeterSystem) -> Result<Element> {
    sys.element_from_word(&word_of(sys.ctype(), w)?)
}

pub fn from_element(e: &Element, sys: &CoxeterSystem) -> Result<SignedPermutation> {
    let ctype = sys.ctype();
    let n = ctype.classical_degree().ok_or_else(|| CoxeterError::Unsupported(format!("{ctype} is not classical")))?;
    sys.reduce_word(e).into_iter().try_fold(SignedPermutation::identity(n), |acc, s| Ok(acc.compose(&generator(ctype, s)?)))
}

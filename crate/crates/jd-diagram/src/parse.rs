//! Text syntax for diagram expressions.
//!
//! ```text
//! Expr    := STerm (("+"|"-") STerm)* | "0"
//! STerm   := [INT "*"] Diagram
//! Diagram := Atom (("⊔"|"&") Atom)*
//! Atom    := "T(" Labels ")" | "O(" Labels ")" | "S(" Label "," Label ")" | Generic
//! Generic := "G{" "t=" INT ";" "legs=[" Labels "];" "edges=[" Pairs "];" "cyc={" Cycs "}" "}"
//! ```
//!
//! Whitespace is ignored. Vertices are `v1..vt`, legs `l1..lm`, edges
//! `e1..ek` in listed order.

use crate::canon::canonicalize;
use crate::diagram::{Diagram, Endpoint};
use crate::error::DiagramError;
use crate::expr::{Expr, Ring};
use crate::label::Label;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Syntax { pos, msg: msg.into() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), DiagramError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(syntax(self.pos, format!("expected `{s}`")))
        }
    }

    fn int(&mut self) -> Result<usize, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected an integer"));
        }
        self.src[start..self.pos].parse().map_err(|_| syntax(start, "integer out of range"))
    }

    fn label(&mut self) -> Result<Label, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.src[self.pos..].starts_with(['+', '-']) {
            self.pos += 1;
        }
        let text = &self.src[start..self.pos];
        if text.is_empty() {
            return Err(syntax(start, "expected a label"));
        }
        text.parse()
    }

    fn labels(&mut self, close: &str) -> Result<Vec<Label>, DiagramError> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.label()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn name(&mut self, prefix: char) -> Result<usize, DiagramError> {
        self.skip_ws();
        let pos = self.pos;
        if !self.eat(&prefix.to_string()) {
            return Err(syntax(pos, format!("expected `{prefix}<n>`")));
        }
        let n = self.int()?;
        if n == 0 {
            return Err(syntax(pos, "names are numbered from 1"));
        }
        Ok(n - 1)
    }

    fn endpoint(&mut self) -> Result<Endpoint, DiagramError> {
        match self.peek() {
            Some('v') => Ok(Endpoint::Vertex(self.name('v')?)),
            Some('l') => Ok(Endpoint::Leg(self.name('l')?)),
            _ => Err(syntax(self.pos, "expected a vertex `v<n>` or leg `l<n>`")),
        }
    }

    fn generic(&mut self) -> Result<Diagram, DiagramError> {
        let start = self.pos;
        self.expect("t")?;
        self.expect("=")?;
        let t = self.int()?;
        self.expect(";")?;
        self.expect("legs")?;
        self.expect("=")?;
        self.expect("[")?;
        let legs = self.labels("]")?;
        self.expect(";")?;
        self.expect("edges")?;
        self.expect("=")?;
        self.expect("[")?;
        let mut edges = Vec::new();
        if !self.eat("]") {
            loop {
                self.expect("(")?;
                let a = self.endpoint()?;
                self.expect(",")?;
                let b = self.endpoint()?;
                self.expect(")")?;
                edges.push((a, b));
                if self.eat("]") {
                    break;
                }
                self.expect(",")?;
            }
        }
        self.expect(";")?;
        self.expect("cyc")?;
        self.expect("=")?;
        self.expect("{")?;
        let mut cyc: Vec<Option<Vec<usize>>> = vec![None; t];
        if !self.eat("}") {
            loop {
                let vpos = self.pos;
                let v = self.name('v')?;
                if v >= t {
                    return Err(syntax(vpos, format!("vertex v{} out of range", v + 1)));
                }
                if cyc[v].is_some() {
                    return Err(syntax(vpos, format!("vertex v{} listed twice", v + 1)));
                }
                self.expect(":")?;
                self.expect("[")?;
                let mut es = Vec::new();
                loop {
                    es.push(self.name('e')?);
                    if self.eat("]") {
                        break;
                    }
                    self.expect(",")?;
                }
                cyc[v] = Some(es);
                if self.eat("}") {
                    break;
                }
                self.expect(",")?;
            }
        }
        self.expect("}")?;
        let cyc: Vec<Vec<usize>> = cyc
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| syntax(start, format!("no cyclic order for v{}", v + 1))))
            .collect::<Result<_, _>>()?;
        Diagram::from_edges(t, legs, &edges, &cyc)
    }

    fn atom(&mut self) -> Result<Diagram, DiagramError> {
        let pos = self.pos;
        if self.eat("T(") {
            let ls = self.labels(")")?;
            Diagram::tree(&ls)
        } else if self.eat("O(") {
            let ls = self.labels(")")?;
            Diagram::wheel(&ls)
        } else if self.eat("S(") {
            let ls = self.labels(")")?;
            if ls.len() != 2 {
                return Err(syntax(pos, "S takes exactly 2 labels"));
            }
            Ok(Diagram::strut(ls[0], ls[1]))
        } else if self.eat("G{") {
            self.generic()
        } else {
            Err(syntax(self.pos, "expected T(…), O(…), S(…) or G{…}"))
        }
    }

    fn diagram(&mut self) -> Result<Diagram, DiagramError> {
        let mut d = self.atom()?;
        while self.eat("⊔") || self.eat("&") {
            d = d.disjoint_union(&self.atom()?);
        }
        Ok(d)
    }

    fn expr(&mut self) -> Result<Expr, DiagramError> {
        let mut e = Expr::zero(Ring::Z);
        if self.eat("0") {
            return Ok(e);
        }
        let mut sign = if self.eat("-") {
            -1
        } else {
            self.eat("+");
            1
        };
        loop {
            let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let c = self.int()? as i64;
                self.expect("*")?;
                c
            } else {
                1
            };
            let d = self.diagram()?;
            e.add_diagram(&d, sign * coeff);
            if self.eat("+") {
                sign = 1;
            } else if self.eat("-") {
                sign = -1;
            } else {
                return Ok(e);
            }
        }
    }
}

/// Parses an expression with integer coefficients.
pub fn parse_expr(text: &str) -> Result<Expr, DiagramError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(syntax(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a single diagram (no coefficients, no sums).
pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let mut p = Parser { src: text, pos: 0 };
    let d = p.diagram()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(syntax(p.pos, "unexpected trailing input"));
    }
    Ok(d)
}

fn join_labels(ls: &[Label]) -> String {
    ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
}

fn render_generic(d: &Diagram) -> String {
    let (edges, cyc) = d.to_edges();
    let end = |e: &Endpoint| match e {
        Endpoint::Vertex(v) => format!("v{}", v + 1),
        Endpoint::Leg(l) => format!("l{}", l + 1),
    };
    let edges: Vec<String> = edges.iter().map(|(a, b)| format!("({},{})", end(a), end(b))).collect();
    let cyc: Vec<String> = cyc
        .iter()
        .enumerate()
        .map(|(v, es)| format!("v{}:[{}]", v + 1, es.iter().map(|e| format!("e{}", e + 1)).collect::<Vec<_>>().join(",")))
        .collect();
    format!(
        "G{{t={}; legs=[{}]; edges=[{}]; cyc={{{}}}}}",
        d.trivalent_count(),
        join_labels(d.legs()),
        edges.join(","),
        cyc.join(",")
    )
}

/// Labels of a wheel read around its circle, if `d` is one.
fn as_wheel(d: &Diagram) -> Option<Vec<Label>> {
    let t = d.trivalent_count();
    if t == 0 || d.leg_count() != t {
        return None;
    }
    // Every vertex carries exactly one leg.
    let mut leg_slot = vec![usize::MAX; t];
    for j in 0..d.leg_count() {
        let p = d.leg_partner(j);
        if p >= 3 * t || leg_slot[p / 3] != usize::MAX {
            return None;
        }
        leg_slot[p / 3] = p % 3;
    }
    let mut labels = Vec::with_capacity(t);
    let mut v = 0;
    let mut came_from = usize::MAX;
    for _ in 0..t {
        let leg = d.pair(3 * v + leg_slot[v]) - 3 * t;
        labels.push(d.legs()[leg]);
        let exits: Vec<usize> = (0..3).filter(|&s| s != leg_slot[v]).map(|s| 3 * v + s).collect();
        let next = exits.iter().map(|&x| d.pair(x)).find(|&p| p / 3 != came_from || t <= 2)?;
        came_from = v;
        v = next / 3;
    }
    (v == 0).then_some(labels)
}

/// Labels of a caterpillar tree `T(a₁,…,aₙ)`, if `d` is one.
fn as_caterpillar(d: &Diagram) -> Option<Vec<Label>> {
    let t = d.trivalent_count();
    let m = d.leg_count();
    if t == 0 || m != t + 2 || !d.is_connected() {
        return None;
    }
    let is_leg = |x: usize| x >= 3 * t;
    let legs_at = |v: usize| -> Vec<Label> { (0..3).map(|s| d.pair(3 * v + s)).filter(|&p| is_leg(p)).map(|p| d.legs()[p - 3 * t]).collect() };
    if t == 1 {
        return Some(legs_at(0));
    }
    let internal = |v: usize| -> Vec<usize> { (0..3).map(|s| d.pair(3 * v + s)).filter(|&p| !is_leg(p)).map(|p| p / 3).collect() };
    let start = (0..t).find(|&v| internal(v).len() == 1)?;
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next: Vec<usize> = internal(cur).into_iter().filter(|&u| u != prev).collect();
        match next.len() {
            0 => break,
            1 => {
                prev = cur;
                cur = next[0];
                path.push(cur);
            }
            _ => return None,
        }
    }
    if path.len() != t {
        return None;
    }
    let mut out = legs_at(path[0]);
    for &v in &path[1..t - 1] {
        let ls = legs_at(v);
        if ls.len() != 1 {
            return None;
        }
        out.push(ls[0]);
    }
    out.extend(legs_at(path[t - 1]));
    Some(out)
}

/// Renders one connected diagram, returning the text and the sign `s` with
/// `d = s · parse(text)`.
fn render_component(d: &Diagram) -> (String, i64) {
    let target = canonicalize(d);
    let try_build = |text: String, built: Result<Diagram, DiagramError>| -> Option<(String, i64)> {
        let b = canonicalize(&built.ok()?);
        (b.key == target.key).then(|| (text, (b.sign * target.sign) as i64))
    };
    let t = d.trivalent_count();
    if t == 0 && d.leg_count() == 2 {
        let (a, b) = (d.legs()[0], d.legs()[1]);
        return (format!("S({a},{b})"), 1);
    }
    if let Some(ls) = as_caterpillar(d) {
        if let Some(r) = try_build(format!("T({})", join_labels(&ls)), Diagram::tree(&ls)) {
            return r;
        }
    }
    if let Some(ls) = as_wheel(d) {
        if let Some(r) = try_build(format!("O({})", join_labels(&ls)), Diagram::wheel(&ls)) {
            return r;
        }
    }
    (render_generic(d), 1)
}

/// Renders a diagram as `±text`, returning the sign separately.
pub fn render_diagram(d: &Diagram) -> (String, i64) {
    if d.is_empty() {
        return (render_generic(d), 1);
    }
    let mut sign = 1;
    let parts: Vec<String> = d
        .split_components()
        .iter()
        .map(|c| {
            let (s, e) = render_component(c);
            sign *= e;
            s
        })
        .collect();
    (parts.join(" ⊔ "), sign)
}

/// Deterministic text form: terms in class-key order.
pub fn render_expr(e: &Expr) -> String {
    let mut out = String::new();
    for (_, term) in e.terms() {
        let (text, s) = render_diagram(&term.rep);
        let mut c = term.coeff;
        if e.ring() == Ring::Z && !term.odd {
            c *= s;
        }
        let neg = c < 0;
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != 1 {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

//! Group expressions: `cyclic(6)`, `prod(q8,q8)`, `sdp(elemab(2,2);aut)`,
//! `quot(ut(3,1);center)`, `thm2(prop9(2,2);prop9(2,2);prop9(3,2))`.
//!
//! ```text
//! spec   := atom | call
//! atom   := trivial | q8 | qd16 | brewster | s0
//! call   := cyclic(k) | elemab(p,k) | sym(n) | dih(n) | ut(p,n)
//!         | extraspecial(p,plus|minus) | prop9(p,n) | minimal(p)
//!         | prod(spec, spec, ...)
//!         | sdp(spec; aut) | sdp(spec; spec [; action=aut|trivial])
//!         | quot(spec; center|derived)
//!         | thm2(spec; spec; spec)
//! ```
//!
//! `brewster` evaluates to its `2`-group; `prop9` and `minimal` evaluate to
//! `[P]T`. Arguments of `thm2` must be `brewster`, `prop9` or `minimal`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{
    automorphism_group, center, derived_subgroup, direct_product, find_isomorphism, quotient_named,
    semidirect_product, FiniteGroup, GroupAction, AUTOMORPHISM_BOUND,
};

use super::components::{brewster, minimal, prop9_action, s0, theorem2_build, Component, Theorem2Group};
use super::named::{cyclic, dih, elemab, extraspecial, q8, qd16, sym, trivial, Extraspecial, Extraspecial as Kind};
use super::unitriangular::unitriangular;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdpAction {
    Aut,
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedSubgroup {
    Center,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Trivial,
    Cyclic(usize),
    ElemAb(usize, usize),
    Sym(usize),
    Dih(usize),
    Q8,
    Qd16,
    Extraspecial(usize, Extraspecial),
    Ut(u32, u32),
    Brewster,
    S0,
    Prop9(u32, u32),
    Minimal(u32),
    Product(Vec<GroupSpec>),
    /// `acting = None` means the full automorphism group of `normal`.
    Sdp {
        normal: Box<GroupSpec>,
        acting: Option<Box<GroupSpec>>,
        action: SdpAction,
    },
    Quotient(Box<GroupSpec>, NamedSubgroup),
    Theorem2(Box<[GroupSpec; 3]>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            Trivial => write!(f, "trivial"),
            Cyclic(k) => write!(f, "cyclic({k})"),
            ElemAb(p, k) => write!(f, "elemab({p},{k})"),
            Sym(n) => write!(f, "sym({n})"),
            Dih(n) => write!(f, "dih({n})"),
            Q8 => write!(f, "q8"),
            Qd16 => write!(f, "qd16"),
            Extraspecial(p, Kind::Plus) => write!(f, "extraspecial({p},plus)"),
            Extraspecial(p, Kind::Minus) => write!(f, "extraspecial({p},minus)"),
            Ut(p, n) => write!(f, "ut({p},{n})"),
            Brewster => write!(f, "brewster"),
            S0 => write!(f, "s0"),
            Prop9(p, n) => write!(f, "prop9({p},{n})"),
            Minimal(p) => write!(f, "minimal({p})"),
            Product(xs) => {
                write!(f, "prod(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Sdp { normal, acting: None, .. } => write!(f, "sdp({normal};aut)"),
            Sdp {
                normal,
                acting: Some(t),
                action,
            } => {
                let a = match action {
                    SdpAction::Aut => "aut",
                    SdpAction::Trivial => "trivial",
                };
                write!(f, "sdp({normal};{t};action={a})")
            }
            Quotient(g, NamedSubgroup::Center) => write!(f, "quot({g};center)"),
            Quotient(g, NamedSubgroup::Derived) => write!(f, "quot({g};derived)"),
            Theorem2(cs) => write!(f, "thm2({};{};{})", cs[0], cs[1], cs[2]),
        }
    }
}

/// A syntax error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_spec(text: &str) -> std::result::Result<GroupSpec, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(spec)
}

impl std::str::FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_spec(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

enum Arg {
    Spec(GroupSpec, usize),
    Int(u64, usize),
    Word(String, usize),
    Action(SdpAction, usize),
}

impl Arg {
    fn position(&self) -> usize {
        match self {
            Arg::Spec(_, p) | Arg::Int(_, p) | Arg::Word(_, p) | Arg::Action(_, p) => *p,
        }
    }
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn word(&mut self) -> Option<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((self.src[start..start + len].to_string(), start))
    }

    fn spec(&mut self) -> std::result::Result<GroupSpec, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let (name, _) = self.word().ok_or_else(|| self.error("expected a group expression"))?;
        if name.starts_with(|c: char| c.is_ascii_digit()) {
            return Err(ParseError {
                position: start,
                message: format!("expected a group expression, found '{name}'"),
            });
        }
        let args = if self.peek() == Some('(') {
            self.pos += 1;
            let args = self.args(&name)?;
            self.expect(')')?;
            Some(args)
        } else {
            None
        };
        build(&name, start, args)
    }

    /// Arguments separated by `,` or `;`; each group of `;`-separated
    /// arguments is returned as one entry.
    fn args(&mut self, head: &str) -> std::result::Result<Vec<Vec<Arg>>, ParseError> {
        let mut groups = vec![Vec::new()];
        loop {
            let arg = self.arg(head)?;
            groups.last_mut().unwrap().push(arg);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(';') => {
                    self.pos += 1;
                    groups.push(Vec::new());
                }
                _ => return Ok(groups),
            }
        }
    }

    fn arg(&mut self, head: &str) -> std::result::Result<Arg, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let (w, _) = self.word().unwrap();
                let v = w.parse::<u64>().map_err(|_| ParseError {
                    position: start,
                    message: format!("invalid integer '{w}'"),
                })?;
                Ok(Arg::Int(v, start))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let save = self.pos;
                let (w, _) = self.word().unwrap();
                let keyword = matches!(
                    (head, w.as_str()),
                    ("extraspecial", "plus" | "minus") | ("quot", "center" | "derived") | ("sdp", "aut")
                );
                if head == "sdp" && w == "action" {
                    self.expect('=')?;
                    let (v, vpos) = self.word().ok_or_else(|| self.error("expected 'aut' or 'trivial'"))?;
                    return match v.as_str() {
                        "aut" => Ok(Arg::Action(SdpAction::Aut, start)),
                        "trivial" => Ok(Arg::Action(SdpAction::Trivial, start)),
                        _ => Err(ParseError {
                            position: vpos,
                            message: format!("unknown action '{v}'"),
                        }),
                    };
                }
                if keyword && self.peek() != Some('(') {
                    return Ok(Arg::Word(w, start));
                }
                self.pos = save;
                Ok(Arg::Spec(self.spec()?, start))
            }
            _ => Err(self.error("expected an argument")),
        }
    }
}

fn arity_error(name: &str, pos: usize, expected: &str) -> ParseError {
    ParseError {
        position: pos,
        message: format!("{name} expects {expected}"),
    }
}

fn build(name: &str, pos: usize, args: Option<Vec<Vec<Arg>>>) -> std::result::Result<GroupSpec, ParseError> {
    use GroupSpec::*;
    let ints = |args: &Option<Vec<Vec<Arg>>>, n: usize, what: &str| -> std::result::Result<Vec<u64>, ParseError> {
        let err = || arity_error(name, pos, what);
        let groups = args.as_ref().ok_or_else(err)?;
        if groups.len() != 1 || groups[0].len() != n {
            return Err(err());
        }
        groups[0]
            .iter()
            .map(|a| match a {
                Arg::Int(v, _) => Ok(*v),
                other => Err(ParseError {
                    position: other.position(),
                    message: format!("{name} expects integer arguments"),
                }),
            })
            .collect()
    };
    let small = |v: u64, at: usize| -> std::result::Result<usize, ParseError> {
        usize::try_from(v).ok().filter(|&x| x <= u32::MAX as usize).ok_or(ParseError {
            position: at,
            message: format!("integer {v} out of range"),
        })
    };
    let nullary = |spec: GroupSpec| match &args {
        None => Ok(spec),
        Some(_) => Err(arity_error(name, pos, "no arguments")),
    };
    match name {
        "trivial" => nullary(Trivial),
        "q8" => nullary(Q8),
        "qd16" => nullary(Qd16),
        "brewster" => nullary(Brewster),
        "s0" => nullary(S0),
        "cyclic" => Ok(Cyclic(small(ints(&args, 1, "one integer")?[0], pos)?)),
        "sym" => Ok(Sym(small(ints(&args, 1, "one integer")?[0], pos)?)),
        "dih" => Ok(Dih(small(ints(&args, 1, "one integer")?[0], pos)?)),
        "minimal" => Ok(Minimal(small(ints(&args, 1, "one integer")?[0], pos)? as u32)),
        "elemab" => {
            let v = ints(&args, 2, "two integers")?;
            Ok(ElemAb(small(v[0], pos)?, small(v[1], pos)?))
        }
        "ut" => {
            let v = ints(&args, 2, "two integers")?;
            Ok(Ut(small(v[0], pos)? as u32, small(v[1], pos)? as u32))
        }
        "prop9" => {
            let v = ints(&args, 2, "two integers")?;
            Ok(Prop9(small(v[0], pos)? as u32, small(v[1], pos)? as u32))
        }
        "extraspecial" => {
            let err = || arity_error(name, pos, "a prime and plus|minus");
            let groups = args.ok_or_else(err)?;
            match groups.as_slice() {
                [g] => match g.as_slice() {
                    [Arg::Int(p, at), Arg::Word(w, _)] => {
                        let kind = if w == "plus" {
                            Kind::Plus
                        } else {
                            Kind::Minus
                        };
                        Ok(Extraspecial(small(*p, *at)?, kind))
                    }
                    _ => Err(err()),
                },
                _ => Err(err()),
            }
        }
        "prod" => {
            let err = || arity_error(name, pos, "at least one group, separated by ','");
            let groups = args.ok_or_else(err)?;
            if groups.len() != 1 {
                return Err(err());
            }
            let mut out = Vec::new();
            for a in groups.into_iter().next().unwrap() {
                match a {
                    Arg::Spec(s, _) => out.push(s),
                    other => {
                        return Err(ParseError {
                            position: other.position(),
                            message: "prod expects group arguments".into(),
                        })
                    }
                }
            }
            Ok(Product(out))
        }
        "quot" => {
            let err = || arity_error(name, pos, "a group and center|derived, separated by ';'");
            let groups = args.ok_or_else(err)?;
            let mut it = groups.into_iter();
            match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => match (single(a), single(b)) {
                    (Some(Arg::Spec(g, _)), Some(Arg::Word(w, _))) => {
                        let n = if w == "center" {
                            NamedSubgroup::Center
                        } else {
                            NamedSubgroup::Derived
                        };
                        Ok(Quotient(Box::new(g), n))
                    }
                    _ => Err(err()),
                },
                _ => Err(err()),
            }
        }
        "sdp" => {
            let err = || arity_error(name, pos, "sdp(N; aut) or sdp(N; T [; action=aut|trivial])");
            let groups = args.ok_or_else(err)?;
            let mut parts: Vec<Arg> = Vec::new();
            for g in groups {
                parts.push(single(g).ok_or_else(err)?);
            }
            let mut it = parts.into_iter();
            let normal = match it.next() {
                Some(Arg::Spec(n, _)) => Box::new(n),
                _ => return Err(err()),
            };
            match (it.next(), it.next(), it.next()) {
                (Some(Arg::Word(w, _)), None, None) if w == "aut" => Ok(Sdp {
                    normal,
                    acting: None,
                    action: SdpAction::Aut,
                }),
                (Some(Arg::Spec(t, _)), action, None) => {
                    let action = match action {
                        None => SdpAction::Aut,
                        Some(Arg::Action(a, _)) => a,
                        Some(_) => return Err(err()),
                    };
                    Ok(Sdp {
                        normal,
                        acting: Some(Box::new(t)),
                        action,
                    })
                }
                _ => Err(err()),
            }
        }
        "thm2" => {
            let err = || arity_error(name, pos, "three components separated by ';'");
            let groups = args.ok_or_else(err)?;
            if groups.len() != 3 {
                return Err(err());
            }
            let mut cs = Vec::new();
            for g in groups {
                match single(g) {
                    Some(Arg::Spec(s, _)) => cs.push(s),
                    _ => return Err(err()),
                }
            }
            let [a, b, c]: [GroupSpec; 3] = cs.try_into().map_err(|_| err())?;
            Ok(Theorem2(Box::new([a, b, c])))
        }
        _ => Err(ParseError {
            position: pos,
            message: format!("unknown group '{name}'"),
        }),
    }
}

fn single(mut g: Vec<Arg>) -> Option<Arg> {
    (g.len() == 1).then(|| g.pop().unwrap())
}

/// An evaluated expression with any auxiliary structure it carries.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub group: Arc<FiniteGroup>,
    /// Set for `brewster`, `prop9` and `minimal`.
    pub component: Option<Component>,
    /// Set for `thm2` and `s0`.
    pub theorem2: Option<Theorem2Group>,
}

impl Evaluated {
    fn plain(group: Arc<FiniteGroup>) -> Self {
        Evaluated {
            group,
            component: None,
            theorem2: None,
        }
    }
}

impl GroupSpec {
    pub fn eval(&self) -> Result<Evaluated> {
        use GroupSpec::*;
        Ok(match self {
            Trivial => Evaluated::plain(trivial()),
            Cyclic(k) => Evaluated::plain(cyclic(*k)?),
            ElemAb(p, k) => Evaluated::plain(elemab(*p, *k)?),
            Sym(n) => Evaluated::plain(sym(*n)?),
            Dih(n) => Evaluated::plain(dih(*n)?),
            Q8 => Evaluated::plain(q8()),
            Qd16 => Evaluated::plain(qd16()),
            Extraspecial(p, kind) => Evaluated::plain(extraspecial(*p, *kind)?),
            Ut(p, n) => Evaluated::plain(unitriangular(*p, *n)?),
            Brewster | Prop9(..) | Minimal(_) => {
                let c = self.component()?;
                let group = if matches!(self, Brewster) {
                    c.p().clone()
                } else {
                    c.semidirect.clone()
                };
                Evaluated {
                    group,
                    component: Some(c),
                    theorem2: None,
                }
            }
            S0 => {
                let t = s0()?;
                Evaluated {
                    group: t.group.clone(),
                    component: None,
                    theorem2: Some(t),
                }
            }
            Theorem2(cs) => {
                let t = theorem2_build([cs[0].component()?, cs[1].component()?, cs[2].component()?])?;
                Evaluated {
                    group: t.group.clone(),
                    component: None,
                    theorem2: Some(t),
                }
            }
            Product(xs) => {
                let gs = xs.iter().map(|x| Ok(x.eval()?.group)).collect::<Result<Vec<_>>>()?;
                if gs.is_empty() {
                    return Err(Error::Precondition("prod needs at least one factor".into()));
                }
                let order = gs
                    .iter()
                    .try_fold(1usize, |acc, g| acc.checked_mul(g.order()))
                    .unwrap_or(usize::MAX);
                if order > super::named::MAX_ATOM_ORDER {
                    return Err(Error::capacity("product order", super::named::MAX_ATOM_ORDER as u64));
                }
                Evaluated::plain(direct_product(&gs)?.0)
            }
            Sdp { normal, acting, action } => {
                let n = normal.eval()?.group;
                let full = || automorphism_group(&n, AUTOMORPHISM_BOUND);
                let act = match (acting, action) {
                    (None, _) => full()?,
                    (Some(t), SdpAction::Trivial) => GroupAction::trivial(t.eval()?.group, n.clone()),
                    (Some(t), SdpAction::Aut) => {
                        let t = t.eval()?.group;
                        let aut = full()?;
                        let iso = find_isomorphism(&t, aut.acting()).ok_or_else(|| {
                            Error::Precondition(format!("{} is not isomorphic to Aut({})", t.name(), n.name()))
                        })?;
                        let maps = iso.iter().map(|&a| aut.tables()[a as usize].clone()).collect();
                        GroupAction::new(t, n.clone(), maps)?
                    }
                };
                Evaluated::plain(semidirect_product(&act)?)
            }
            Quotient(g, which) => {
                let g = g.eval()?.group;
                let sub = match which {
                    NamedSubgroup::Center => center(&g),
                    NamedSubgroup::Derived => derived_subgroup(&g),
                };
                Evaluated::plain(quotient_named(&g, &sub, self.to_string())?.0)
            }
        })
    }

    /// The action data behind `brewster`, `prop9` and `minimal`.
    pub fn component(&self) -> Result<Component> {
        match self {
            GroupSpec::Brewster => brewster(),
            GroupSpec::Prop9(p, n) => prop9_action(*p, *n),
            GroupSpec::Minimal(p) => minimal(*p),
            other => Err(Error::Precondition(format!(
                "{other} is not a component (expected brewster, prop9 or minimal)"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_atoms_and_combinators() {
        assert_eq!(parse_spec("sym(4)").unwrap(), GroupSpec::Sym(4));
        assert_eq!(parse_spec(" q8 ").unwrap(), GroupSpec::Q8);
        assert_eq!(
            parse_spec("prod(q8,q8)").unwrap(),
            GroupSpec::Product(vec![GroupSpec::Q8, GroupSpec::Q8])
        );
        let t = parse_spec("thm2(prop9(2,2); prop9(2,2); prop9(3,2))").unwrap();
        assert_eq!(
            t,
            GroupSpec::Theorem2(Box::new([
                GroupSpec::Prop9(2, 2),
                GroupSpec::Prop9(2, 2),
                GroupSpec::Prop9(3, 2)
            ]))
        );
        assert_eq!(
            parse_spec("extraspecial(3, minus)").unwrap(),
            GroupSpec::Extraspecial(3, Kind::Minus)
        );
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "cyclic(6)",
            "elemab(2,3)",
            "prod(sym(3),cyclic(2),q8)",
            "sdp(elemab(2,2);aut)",
            "sdp(elemab(2,2);sym(3);action=aut)",
            "sdp(cyclic(3);cyclic(2);action=trivial)",
            "quot(ut(3,1);center)",
            "thm2(minimal(2);brewster;minimal(3))",
            "extraspecial(2,plus)",
        ] {
            let spec = parse_spec(s).unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_spec("prod(q8, foo)").unwrap_err();
        assert_eq!(e.position, 9);
        assert!(e.message.contains("unknown group"));
        let e = parse_spec("cyclic(2,3)").unwrap_err();
        assert_eq!(e.position, 0);
        let e = parse_spec("sym(4").unwrap_err();
        assert_eq!(e.position, 5);
        let e = parse_spec("q8 q8").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(parse_spec("").is_err());
        assert!(parse_spec("thm2(q8;q8)").is_err());
        assert!(parse_spec("sdp(q8;action=bad)").is_err());
    }

    #[test]
    fn evaluates_orders() {
        let order = |s: &str| parse_spec(s).unwrap().eval().unwrap().group.order();
        assert_eq!(order("cyclic(6)"), 6);
        assert_eq!(order("prod(q8,q8)"), 64);
        assert_eq!(order("sdp(elemab(2,2);aut)"), 24);
        assert_eq!(order("sdp(elemab(2,2);sym(3);action=aut)"), 24);
        assert_eq!(order("sdp(cyclic(3);cyclic(2);action=trivial)"), 6);
        assert_eq!(order("quot(ut(3,1);center)"), 9);
        assert_eq!(order("quot(sym(4);derived)"), 2);
        assert_eq!(order("dih(4)"), 8);
    }

    #[test]
    fn sdp_with_aut_matches_s4() {
        let g = parse_spec("sdp(elemab(2,2);sym(3);action=aut)").unwrap().eval().unwrap().group;
        assert!(find_isomorphism(&g, &sym(4).unwrap()).is_some());
        assert!(parse_spec("sdp(elemab(2,2);cyclic(6);action=aut)")
            .unwrap()
            .eval()
            .is_err());
    }

    #[test]
    fn components_only_in_thm2() {
        assert!(parse_spec("thm2(q8;q8;q8)").unwrap().eval().is_err());
        let e = parse_spec("minimal(2)").unwrap().eval().unwrap();
        assert!(e.component.is_some());
        assert_eq!(e.group.order(), 24);
    }
}

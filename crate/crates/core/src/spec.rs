//! Textual group constructors.
//!
//! ```text
//! spec := cyclic:<n> | dihedral:<order> | quaternion:8 | m3 | heisenberg:<p>
//!       | jgroup | extraspecial:p=<p>,n=<n>,type=<+|->
//!       | direct(<spec>,<spec>) | central(<spec>,<spec>) | file:<path>
//! ```
//!
//! Loading `file:` specs needs IO, so [`GroupSpec::build`] takes a loader.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use crate::constructions::{self, ExtraspecialType};
use crate::group::{FiniteGroup, GroupError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    M3,
    Heisenberg(usize),
    J,
    Extraspecial { p: usize, n: usize, kind: ExtraspecialType },
    Direct(Box<GroupSpec>, Box<GroupSpec>),
    Central(Box<GroupSpec>, Box<GroupSpec>),
    File(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for SpecParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl core::error::Error for SpecParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecBuildError {
    Group(GroupError),
    File { path: String, message: String },
}

impl From<GroupError> for SpecBuildError {
    fn from(e: GroupError) -> Self {
        SpecBuildError::Group(e)
    }
}

impl fmt::Display for SpecBuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecBuildError::Group(e) => write!(f, "{e}"),
            SpecBuildError::File { path, message } => write!(f, "{path}: {message}"),
        }
    }
}

impl core::error::Error for SpecBuildError {}

impl GroupSpec {
    pub fn parse(input: &str) -> Result<GroupSpec, SpecParseError> {
        let mut p = Parser { src: input.as_bytes(), pos: 0 };
        let spec = p.spec(0)?;
        if p.pos != input.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }

    /// Builds the group, resolving `file:` leaves through `load`.
    pub fn build(
        &self,
        cap: usize,
        load: &mut dyn FnMut(&str) -> Result<FiniteGroup, SpecBuildError>,
    ) -> Result<FiniteGroup, SpecBuildError> {
        use GroupSpec::*;
        let group = match self {
            Cyclic(n) => constructions::cyclic_capped(*n, cap)?,
            Dihedral(n) => constructions::dihedral_capped(*n, cap)?,
            Quaternion8 => constructions::quaternion8()?,
            M3 => constructions::m3()?,
            Heisenberg(p) => constructions::heisenberg_capped(*p, cap)?,
            J => constructions::group_j()?,
            Extraspecial { p, n, kind } => constructions::extraspecial_capped(*p, *n, *kind, cap)?,
            Direct(a, b) => {
                let ga = a.build(cap, load)?;
                let gb = b.build(cap, load)?;
                constructions::direct_product_capped(&ga, &gb, cap)?
            }
            Central(a, b) => {
                let ga = a.build(cap, load)?;
                let gb = b.build(cap, load)?;
                constructions::central_product_canonical(&ga, &gb, cap)?
            }
            File(path) => load(path)?,
        };
        if group.order() > cap {
            return Err(GroupError::OrderCapExceeded { order: group.order(), cap }.into());
        }
        Ok(group.with_name(&self.to_string()))
    }

    /// Builds a spec that contains no `file:` leaves.
    pub fn build_pure(&self, cap: usize) -> Result<FiniteGroup, SpecBuildError> {
        self.build(cap, &mut |path| {
            Err(SpecBuildError::File { path: path.to_string(), message: "file specs need a loader".to_string() })
        })
    }
}

impl FromStr for GroupSpec {
    type Err = SpecParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            Cyclic(n) => write!(f, "cyclic:{n}"),
            Dihedral(n) => write!(f, "dihedral:{n}"),
            Quaternion8 => write!(f, "quaternion:8"),
            M3 => write!(f, "m3"),
            Heisenberg(p) => write!(f, "heisenberg:{p}"),
            J => write!(f, "jgroup"),
            Extraspecial { p, n, kind } => write!(f, "extraspecial:p={p},n={n},type={}", kind.sign()),
            Direct(a, b) => write!(f, "direct({a},{b})"),
            Central(a, b) => write!(f, "central({a},{b})"),
            File(path) => write!(f, "file:{path}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> SpecParseError {
        SpecParseError { position: self.pos, message: message.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, token: &str) -> Result<(), SpecParseError> {
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn number(&mut self) -> Result<usize, SpecParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        text.parse().map_err(|_| SpecParseError { position: start, message: "number out of range".to_string() })
    }

    fn spec(&mut self, depth: usize) -> Result<GroupSpec, SpecParseError> {
        let start = self.pos;
        let name = self.ident().to_string();
        let spec = match name.as_str() {
            "cyclic" => {
                self.expect(":")?;
                GroupSpec::Cyclic(self.number()?)
            }
            "dihedral" => {
                self.expect(":")?;
                GroupSpec::Dihedral(self.number()?)
            }
            "quaternion" => {
                self.expect(":")?;
                let at = self.pos;
                if self.number()? != 8 {
                    return Err(SpecParseError { position: at, message: "only quaternion:8 is supported".to_string() });
                }
                GroupSpec::Quaternion8
            }
            "m3" => GroupSpec::M3,
            "heisenberg" => {
                self.expect(":")?;
                GroupSpec::Heisenberg(self.number()?)
            }
            "jgroup" => GroupSpec::J,
            "extraspecial" => {
                self.expect(":p=")?;
                let p = self.number()?;
                self.expect(",n=")?;
                let n = self.number()?;
                self.expect(",type=")?;
                let kind = match self.peek() {
                    Some(b'+') => ExtraspecialType::Plus,
                    Some(b'-') => ExtraspecialType::Minus,
                    _ => return Err(self.error("expected `+` or `-`")),
                };
                self.pos += 1;
                GroupSpec::Extraspecial { p, n, kind }
            }
            "direct" | "central" => {
                self.expect("(")?;
                let a = self.spec(depth + 1)?;
                self.expect(",")?;
                let b = self.spec(depth + 1)?;
                self.expect(")")?;
                if name == "direct" {
                    GroupSpec::Direct(Box::new(a), Box::new(b))
                } else {
                    GroupSpec::Central(Box::new(a), Box::new(b))
                }
            }
            "file" => {
                self.expect(":")?;
                let begin = self.pos;
                while let Some(c) = self.peek() {
                    if depth > 0 && (c == b',' || c == b')') {
                        break;
                    }
                    self.pos += 1;
                }
                if begin == self.pos {
                    return Err(self.error("expected a path"));
                }
                let path = core::str::from_utf8(&self.src[begin..self.pos])
                    .map_err(|_| self.error("path is not UTF-8"))?;
                GroupSpec::File(path.to_string())
            }
            "" => return Err(self.error("expected a group name")),
            other => {
                return Err(SpecParseError { position: start, message: format!("unknown group `{other}`") })
            }
        };
        Ok(spec)
    }
}

//! JSON documents printed on stdout. Field order is part of the interface.

use anyhow::Result;
use serde::Serialize;

use trifree::{Color, Coloring};

#[derive(Serialize)]
pub struct Optimum<'a> {
    pub chi3: Color,
    pub coloring: &'a [Color],
}

impl<'a> Optimum<'a> {
    pub fn new(chi3: Color, c: &'a Coloring) -> Self {
        Optimum {
            chi3,
            coloring: c.colors(),
        }
    }
}

#[derive(Serialize)]
pub struct Decision<'a> {
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<Color>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<&'a [Color]>,
}

impl<'a> Decision<'a> {
    pub fn feasible(q: Color, c: &'a Coloring) -> Self {
        Decision {
            feasible: true,
            q: Some(q),
            coloring: Some(c.colors()),
        }
    }

    pub fn infeasible() -> Self {
        Decision {
            feasible: false,
            q: None,
            coloring: None,
        }
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub k: Color,
    pub colors_used: usize,
    pub proper: bool,
    pub triangle_free: bool,
    pub polar_respected: bool,
}

pub fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

//! Feature cubes and the classification baselines.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Object class. The set is closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    Pedestrian,
    Car,
    Cyclist,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 3] = [ClassLabel::Pedestrian, ClassLabel::Car, ClassLabel::Cyclist];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClassLabel::Pedestrian => "pedestrian",
            ClassLabel::Car => "car",
            ClassLabel::Cyclist => "cyclist",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pedestrian" => Ok(ClassLabel::Pedestrian),
            "car" => Ok(ClassLabel::Car),
            "cyclist" => Ok(ClassLabel::Cyclist),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown class label `{other}`"),
            }),
        }
    }
}

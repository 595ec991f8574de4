use std::ops::Deref;

use crate::{Error, Result};

/// Longest accepted input. The suffix sorter works on `n + 1` signed 32-bit
/// slots (one for the virtual terminator), which caps `n` here.
pub const MAX_TEXT_LEN: usize = i32::MAX as usize - 1;

/// Immutable input string over the byte alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Text(Box<[u8]>);

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Text> {
        let bytes = bytes.into();
        if bytes.len() > MAX_TEXT_LEN {
            return Err(Error::TextTooLarge {
                len: bytes.len(),
                max: MAX_TEXT_LEN,
            });
        }
        Ok(Text(bytes.into_boxed_slice()))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of distinct symbols that actually occur.
    pub fn alphabet_size(&self) -> usize {
        let mut seen = [false; 256];
        for &b in self.0.iter() {
            seen[b as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }
}

impl Deref for Text {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

/// Panics only for inputs beyond [`MAX_TEXT_LEN`]; use [`Text::new`] for
/// untrusted lengths.
impl From<&str> for Text {
    fn from(s: &str) -> Text {
        Text::new(s.as_bytes()).expect("text too large")
    }
}

impl From<&[u8]> for Text {
    fn from(s: &[u8]) -> Text {
        Text::new(s).expect("text too large")
    }
}

impl TryFrom<Vec<u8>> for Text {
    type Error = Error;

    fn try_from(v: Vec<u8>) -> Result<Text> {
        Text::new(v)
    }
}

//! The A/R signature rule shared by the untwisted and twisted crystals.

use serde::{Deserialize, Serialize};

/// A signature letter: an addable or a removable node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    A,
    R,
}

/// Indices of the letters that survive repeated deletion of adjacent `AR`.
///
/// The survivors always read `R..RA..A`.
pub(crate) fn surviving(letters: &[Letter]) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::with_capacity(letters.len());
    for (i, &letter) in letters.iter().enumerate() {
        if letter == Letter::R {
            if let Some(&top) = stack.last() {
                if letters[top] == Letter::A {
                    stack.pop();
                    continue;
                }
            }
        }
        stack.push(i);
    }
    stack
}

pub(crate) fn word(letters: impl IntoIterator<Item = Letter>) -> String {
    letters
        .into_iter()
        .map(|l| match l {
            Letter::A => 'A',
            Letter::R => 'R',
        })
        .collect()
}

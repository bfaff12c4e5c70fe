//! Length-by-length renumbering of window classes.
//!
//! Windows of length `n` starting at `i` get the same id iff they spell the
//! same factor. Ids for length `n` are derived from the ids for `n - 1` and the
//! window's last letter, numbered in order of first occurrence.

use std::collections::HashMap;

const UNSET: u32 = u32::MAX;
const TABLE_LIMIT: usize = 1 << 24;

pub(crate) struct Refiner {
    stride: usize,
    table: Vec<u32>,
    touched: Vec<usize>,
    map: HashMap<u64, u32>,
}

impl Refiner {
    /// `letters` bounds every symbol value that will be seen.
    pub fn new(letters: usize) -> Self {
        Self { stride: letters + 1, table: Vec::new(), touched: Vec::new(), map: HashMap::new() }
    }

    /// Given `prev[i]` = class of `text[i..i + n - 1]` for every
    /// `i <= text.len() - (n - 1)`, returns the classes of `text[i..i + n]` and
    /// their count.
    pub fn refine(&mut self, text: &[u8], prev: &[u32], prev_classes: usize, n: usize) -> (Vec<u32>, usize) {
        debug_assert!(n >= 1 && n <= text.len());
        let windows = text.len() - n + 1;
        let mut out = Vec::with_capacity(windows);
        let mut next_id = 0u32;
        let cells = prev_classes * self.stride;
        if cells <= TABLE_LIMIT {
            if self.table.len() < cells {
                self.table.resize(cells, UNSET);
            }
            for i in 0..windows {
                let cell = prev[i] as usize * self.stride + text[i + n - 1] as usize;
                let slot = &mut self.table[cell];
                if *slot == UNSET {
                    *slot = next_id;
                    next_id += 1;
                    self.touched.push(cell);
                }
                out.push(*slot);
            }
            for cell in self.touched.drain(..) {
                self.table[cell] = UNSET;
            }
        } else {
            self.map.clear();
            for i in 0..windows {
                let key = prev[i] as u64 * self.stride as u64 + text[i + n - 1] as u64;
                let id = *self.map.entry(key).or_insert_with(|| {
                    next_id += 1;
                    next_id - 1
                });
                out.push(id);
            }
        }
        (out, next_id as usize)
    }
}

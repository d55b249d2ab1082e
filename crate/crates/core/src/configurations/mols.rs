use super::{Configuration, Point, Resolution};
use crate::error::{Error, Result};
use crate::fields::make_field;

/// The resolvable `(kw, k)` configuration of a transversal design over
/// GF(w).
///
/// Point `(i, x)` is numbered `i*w + x`. For each of the first `k` slopes
/// `c`, block `c*w + a` is `{(i, a + c*i) : i < k}` with `i` read as a field
/// element, and the blocks sharing a slope form one parallel class.
pub fn from_mols(k: usize, w: u64) -> Result<(Configuration, Resolution)> {
    let field = make_field(w)?;
    if k as u64 > w {
        return Err(Error::KTooLarge { k, w });
    }
    let w = w as u32;
    let mut blocks = Vec::with_capacity(k * w as usize);
    let mut classes = Vec::with_capacity(k);
    for c in 0..k as u32 {
        let mut class = Vec::with_capacity(w as usize);
        for a in 0..w {
            class.push(blocks.len());
            blocks.push(
                (0..k as u32)
                    .map(|i| i * w + field.add(a, field.mul(c, i)) as Point)
                    .collect(),
            );
        }
        classes.push(class);
    }
    Ok((
        Configuration::new(k * w as usize, k, blocks),
        Resolution::new(classes),
    ))
}

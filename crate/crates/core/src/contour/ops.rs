use std::sync::atomic::{AtomicU32, Ordering::Relaxed};

use crate::graph::VertexId;

/// Lowers `cell` to `z` if it currently holds a larger value.
///
/// Atomic mode retries a compare-and-swap until the cell is `<= z`, so no
/// concurrent lowering is lost. Plain mode is a load followed by a store:
/// two racing writers may leave the larger of their two values behind, but
/// the cell never rises above what it held when the sweep began.
#[inline]
pub(crate) fn lower(cell: &AtomicU32, z: VertexId, atomic: bool) -> bool {
    if atomic {
        let mut old = cell.load(Relaxed);
        while old > z {
            match cell.compare_exchange_weak(old, z, Relaxed, Relaxed) {
                Ok(_) => return true,
                Err(current) => old = current,
            }
        }
        false
    } else if cell.load(Relaxed) > z {
        cell.store(z, Relaxed);
        true
    } else {
        false
    }
}

/// Conditional vector assignment: every cell greater than `z` becomes `z`.
/// Returns whether any cell changed.
pub fn conditional_min_assign<'a, I>(cells: I, z: VertexId, atomic: bool) -> bool
where
    I: IntoIterator<Item = &'a AtomicU32>,
{
    cells
        .into_iter()
        .fold(false, |changed, cell| lower(cell, z, atomic) | changed)
}

/// Reusable chain buffers for [`apply_edge`].
#[derive(Default)]
pub(crate) struct Scratch {
    left: Vec<VertexId>,
    right: Vec<VertexId>,
}

/// Follows `read` from `start` for `h` hops. Leaves the visited vertices
/// `L^0..L^(h-1)` in `chain` (stopping at a fixed point, which is kept)
/// and returns `L^h[start]`.
#[inline]
fn walk(read: &[AtomicU32], start: VertexId, h: u32, chain: &mut Vec<VertexId>) -> VertexId {
    chain.clear();
    let mut current = start;
    for _ in 0..h {
        chain.push(current);
        let next = read[current as usize].load(Relaxed);
        if next == current {
            return current;
        }
        current = next;
    }
    current
}

/// Order-`h` minimum mapping on edge `(w, v)`; returns the number of cells
/// lowered.
#[inline]
pub(crate) fn apply_edge(
    target: &[AtomicU32],
    read: &[AtomicU32],
    w: VertexId,
    v: VertexId,
    h: u32,
    atomic: bool,
    scratch: &mut Scratch,
) -> u32 {
    if w == v {
        return 0;
    }
    if h == 1 {
        let z = read[w as usize].load(Relaxed).min(read[v as usize].load(Relaxed));
        return lower(&target[w as usize], z, atomic) as u32
            + lower(&target[v as usize], z, atomic) as u32;
    }
    let z = walk(read, w, h, &mut scratch.left).min(walk(read, v, h, &mut scratch.right));
    let mut lowered = 0;
    for &x in scratch.left.iter().chain(&scratch.right) {
        lowered += lower(&target[x as usize], z, atomic) as u32;
    }
    lowered
}

/// Applies the order-`h` minimum-mapping operator to edge `(w, v)`.
///
/// With `z = min(L^h[w], L^h[v])` computed from `read`, the cells
/// `target[L^j[w]]` and `target[L^j[v]]` for `0 <= j < h` are lowered to
/// `z`. Synchronous sweeps pass distinct `read` and `target` arrays;
/// asynchronous sweeps pass the same array for both. Self-loops are
/// skipped.
pub fn mm_order(
    target: &[AtomicU32],
    read: &[AtomicU32],
    w: VertexId,
    v: VertexId,
    h: u32,
    atomic: bool,
) -> bool {
    assert!(h >= 1, "operator order must be at least 1");
    apply_edge(target, read, w, v, h, atomic, &mut Scratch::default()) > 0
}

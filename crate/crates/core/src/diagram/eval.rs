//! Two independent diagram evaluators.
//!
//! [`evaluate`] treats the diagram as a tensor network: every box becomes
//! a small dense tensor indexed by the wires at its ports, and tensors
//! are contracted pairwise following a greedy plan that always picks the
//! cheapest available pair.  Closed loops fall out naturally as traces.
//!
//! [`evaluate_naive`] computes the same tensor by brute force: it sums
//! the product of box coefficients over every labelling of the wires by
//! basis indices, pruning a branch as soon as a factor is zero.  It uses
//! none of the contraction machinery, which makes agreement between the
//! two evaluators a real consistency check rather than a tautology.

use super::{port_map, Bindings, Diagram, NodeKind, PortMap, TensorValue};
use crate::hopf::{AlgebraError, HopfAlgebra};
use crate::matrix::Mat;
use crate::scalar::{FieldSpec, Scalar};

/// A dense tensor whose axes are diagram wires, all of dimension `n`.
/// `data` is row-major in the order of `wires`.
struct WTensor {
    wires: Vec<usize>,
    data: Vec<Scalar>,
}

fn strides(axes: usize, n: usize) -> Vec<usize> {
    let mut out = vec![1usize; axes];
    for k in (0..axes.saturating_sub(1)).rev() {
        out[k] = out[k + 1] * n;
    }
    out
}

impl WTensor {
    /// Sums out any axis pair that carries the same wire (a box wired to
    /// itself), until all remaining axes are distinct wires.
    fn self_trace(mut self, field: FieldSpec, n: usize) -> WTensor {
        loop {
            let dup = self.wires.iter().enumerate().find_map(|(p1, w)| {
                self.wires[p1 + 1..].iter().position(|x| x == w).map(|off| (p1, p1 + 1 + off))
            });
            let Some((p1, p2)) = dup else { return self };
            let old_strides = strides(self.wires.len(), n);
            let kept: Vec<usize> =
                (0..self.wires.len()).filter(|&p| p != p1 && p != p2).collect();
            let new_wires: Vec<usize> = kept.iter().map(|&p| self.wires[p]).collect();
            let mut data = vec![field.zero(); n.pow(new_wires.len() as u32)];
            let new_strides = strides(new_wires.len(), n);
            for (flat, slot) in data.iter_mut().enumerate() {
                let mut base = 0;
                for (axis, &p) in kept.iter().enumerate() {
                    base += (flat / new_strides[axis] % n) * old_strides[p];
                }
                let mut acc = field.zero();
                for k in 0..n {
                    let v = &self.data[base + k * old_strides[p1] + k * old_strides[p2]];
                    if !v.is_zero() {
                        acc = acc.add(v);
                    }
                }
                *slot = acc;
            }
            self = WTensor { wires: new_wires, data };
        }
    }
}

/// Contracts two tensors over their shared wires (an outer product when
/// they share none).  Axes within each tensor are distinct, so the result
/// keeps each unshared axis exactly once.
fn contract(field: FieldSpec, n: usize, a: &WTensor, b: &WTensor) -> WTensor {
    let shared: Vec<usize> =
        a.wires.iter().copied().filter(|w| b.wires.contains(w)).collect();
    let a_keep: Vec<usize> =
        (0..a.wires.len()).filter(|&p| !shared.contains(&a.wires[p])).collect();
    let b_keep: Vec<usize> =
        (0..b.wires.len()).filter(|&p| !shared.contains(&b.wires[p])).collect();
    let sa = strides(a.wires.len(), n);
    let sb = strides(b.wires.len(), n);
    let pos_in = |t: &WTensor, w: usize| t.wires.iter().position(|&x| x == w).unwrap();

    let out_wires: Vec<usize> = a_keep
        .iter()
        .map(|&p| a.wires[p])
        .chain(b_keep.iter().map(|&p| b.wires[p]))
        .collect();
    let out_strides = strides(out_wires.len(), n);
    let mut data = vec![field.zero(); n.pow(out_wires.len() as u32)];

    // Per output axis, the stride it contributes to the a / b flat index.
    let mut a_axis = vec![0usize; out_wires.len()];
    let mut b_axis = vec![0usize; out_wires.len()];
    for (axis, &p) in a_keep.iter().enumerate() {
        a_axis[axis] = sa[p];
    }
    for (axis, &p) in b_keep.iter().enumerate() {
        b_axis[a_keep.len() + axis] = sb[p];
    }
    let shared_strides: Vec<(usize, usize)> =
        shared.iter().map(|&w| (sa[pos_in(a, w)], sb[pos_in(b, w)])).collect();

    for (flat, slot) in data.iter_mut().enumerate() {
        let mut a_base = 0;
        let mut b_base = 0;
        for axis in 0..out_wires.len() {
            let digit = flat / out_strides[axis] % n;
            a_base += digit * a_axis[axis];
            b_base += digit * b_axis[axis];
        }
        let mut acc = field.zero();
        for sh in 0..n.pow(shared.len() as u32) {
            let mut a_off = 0;
            let mut b_off = 0;
            let mut rem = sh;
            for &(stride_a, stride_b) in shared_strides.iter().rev() {
                let digit = rem % n;
                rem /= n;
                a_off += digit * stride_a;
                b_off += digit * stride_b;
            }
            let x = &a.data[a_base + a_off];
            if x.is_zero() {
                continue;
            }
            let y = &b.data[b_base + b_off];
            if y.is_zero() {
                continue;
            }
            acc = acc.add(&x.mul(y));
        }
        *slot = acc;
    }
    WTensor { wires: out_wires, data }
}

/// The dense tensor of one box, axes ordered output ports then input
/// ports, carrying the wire ids from the port map.
fn node_tensor(
    h: &HopfAlgebra,
    d: &Diagram,
    pm: &PortMap,
    nd: usize,
    bindings: &Bindings,
) -> Result<WTensor, AlgebraError> {
    let n = h.dim();
    let field = h.field();
    let wires: Vec<usize> =
        pm.node_out[nd].iter().chain(pm.node_in[nd].iter()).copied().collect();
    let data = match &d.nodes[nd].kind {
        NodeKind::M => {
            let mut data = vec![field.zero(); n * n * n];
            for l in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        data[(l * n + i) * n + j] = h.m().get(l, i, j).clone();
                    }
                }
            }
            data
        }
        NodeKind::Delta => {
            let mut data = vec![field.zero(); n * n * n];
            for l in 0..n {
                for &(i, j, ref c) in h.delta_terms(l) {
                    data[(i * n + j) * n + l] = c.clone();
                }
            }
            data
        }
        NodeKind::S => h.s().vectorize(),
        NodeKind::SInv => h.s_inv().vectorize(),
        NodeKind::Id => Mat::identity(field, n).vectorize(),
        NodeKind::Eta => h.unit().to_vec(),
        NodeKind::Eps => h.counit().to_vec(),
        NodeKind::Endo(name) => {
            let mat = bindings.get(name).ok_or_else(|| {
                AlgebraError::Invalid(format!(
                    "diagram {}: missing binding for endo:{name}",
                    d.name
                ))
            })?;
            if mat.rows() != n || mat.cols() != n || mat.field() != field {
                return Err(AlgebraError::Invalid(format!(
                    "diagram {}: binding for endo:{name} is not an {n}×{n} matrix over the algebra's field",
                    d.name
                )));
            }
            mat.vectorize()
        }
    };
    Ok(WTensor { wires, data }.self_trace(field, n))
}

/// Turns the fully contracted tensor into the diagram's value.  Free
/// wires that appear in no box (direct input-to-output wires) become
/// identity legs here.
fn assemble(
    field: FieldSpec,
    n: usize,
    d: &Diagram,
    pm: &PortMap,
    t: &WTensor,
) -> TensorValue {
    let out_axes = d.outputs;
    let in_axes = d.inputs;
    // Slot order: output factors first, then input factors.
    let slot_wires: Vec<usize> =
        pm.diag_out.iter().chain(pm.diag_in.iter()).copied().collect();
    let t_strides = strides(t.wires.len(), n);
    // For each tensor axis, the slot that carries its wire.
    let axis_slot: Vec<usize> = t
        .wires
        .iter()
        .map(|w| slot_wires.iter().position(|x| x == w).expect("free wire lost"))
        .collect();
    // Wires feeding two slots at once (straight input-to-output wires)
    // force the two slot indices to agree.
    let mut equal_pairs: Vec<(usize, usize)> = Vec::new();
    for (s1, w) in slot_wires.iter().enumerate() {
        for (off, x) in slot_wires[s1 + 1..].iter().enumerate() {
            if x == w {
                equal_pairs.push((s1, s1 + 1 + off));
            }
        }
    }
    let rows = n.pow(out_axes as u32);
    let cols = n.pow(in_axes as u32);
    let mut mat = Mat::zeros(field, rows, cols);
    let mut digits = vec![0usize; slot_wires.len()];
    for r in 0..rows {
        'cols: for c in 0..cols {
            let mut rem = r;
            for k in (0..out_axes).rev() {
                digits[k] = rem % n;
                rem /= n;
            }
            let mut rem = c;
            for k in (0..in_axes).rev() {
                digits[out_axes + k] = rem % n;
                rem /= n;
            }
            for &(s1, s2) in &equal_pairs {
                if digits[s1] != digits[s2] {
                    continue 'cols;
                }
            }
            let mut flat = 0;
            for (axis, &slot) in axis_slot.iter().enumerate() {
                flat += digits[slot] * t_strides[axis];
            }
            let v = &t.data[flat];
            if !v.is_zero() {
                mat.set(r, c, v.clone());
            }
        }
    }
    TensorValue::new(n, d.inputs, d.outputs, mat)
}

/// Evaluates a diagram by greedy pairwise tensor contraction.
pub fn evaluate(
    h: &HopfAlgebra,
    d: &Diagram,
    bindings: &Bindings,
) -> Result<TensorValue, AlgebraError> {
    let pm = port_map(d)?;
    let n = h.dim();
    let field = h.field();
    let mut tensors: Vec<WTensor> = (0..d.nodes.len())
        .map(|nd| node_tensor(h, d, &pm, nd, bindings))
        .collect::<Result<_, _>>()?;

    while tensors.len() > 1 {
        // Pick the pair whose contraction yields the smallest tensor,
        // breaking ties by total work, then by position.
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for i in 0..tensors.len() {
            for j in i + 1..tensors.len() {
                let shared = tensors[i]
                    .wires
                    .iter()
                    .filter(|w| tensors[j].wires.contains(w))
                    .count();
                let result_rank =
                    tensors[i].wires.len() + tensors[j].wires.len() - 2 * shared;
                let work_rank =
                    tensors[i].wires.len() + tensors[j].wires.len() - shared;
                if best
                    .map(|(br, bw, ..)| (result_rank, work_rank) < (br, bw))
                    .unwrap_or(true)
                {
                    best = Some((result_rank, work_rank, i, j));
                }
            }
        }
        let (_, _, i, j) = best.expect("at least two tensors");
        let merged = contract(field, n, &tensors[i], &tensors[j]);
        tensors.swap_remove(j);
        tensors.swap_remove(i);
        tensors.push(merged);
    }
    let total = tensors.pop().unwrap_or(WTensor {
        wires: Vec::new(),
        data: vec![field.one()],
    });
    Ok(assemble(field, n, d, &pm, &total))
}

/// Evaluates a diagram by summing box coefficients over all labellings
/// of the wires by basis indices, with zero pruning.  Shares nothing
/// with the contraction path beyond the port map.
pub fn evaluate_naive(
    h: &HopfAlgebra,
    d: &Diagram,
    bindings: &Bindings,
) -> Result<TensorValue, AlgebraError> {
    let pm = port_map(d)?;
    let n = h.dim();
    let field = h.field();
    // Resolve endo bindings up front so errors surface before the sum.
    let mut endos: Vec<Option<&Mat>> = vec![None; d.nodes.len()];
    for (nd, node) in d.nodes.iter().enumerate() {
        if let NodeKind::Endo(name) = &node.kind {
            let mat = bindings.get(name).ok_or_else(|| {
                AlgebraError::Invalid(format!(
                    "diagram {}: missing binding for endo:{name}",
                    d.name
                ))
            })?;
            if mat.rows() != n || mat.cols() != n || mat.field() != field {
                return Err(AlgebraError::Invalid(format!(
                    "diagram {}: binding for endo:{name} is not an {n}×{n} matrix over the algebra's field",
                    d.name
                )));
            }
            endos[nd] = Some(mat);
        }
    }

    // A box's coefficient can be computed once all its wires have values;
    // schedule each box at the highest-numbered wire it touches.
    let wire_count = d.wires.len();
    let mut ready_at: Vec<Vec<usize>> = vec![Vec::new(); wire_count.max(1)];
    for nd in 0..d.nodes.len() {
        let last = pm.node_out[nd]
            .iter()
            .chain(pm.node_in[nd].iter())
            .copied()
            .max()
            .expect("every box has at least one port");
        ready_at[last].push(nd);
    }

    let factor = |nd: usize, vals: &[usize]| -> Scalar {
        let outs = &pm.node_out[nd];
        let ins = &pm.node_in[nd];
        match &d.nodes[nd].kind {
            NodeKind::M => h.m().get(vals[outs[0]], vals[ins[0]], vals[ins[1]]).clone(),
            NodeKind::Delta => {
                h.delta().get(vals[ins[0]], vals[outs[0]], vals[outs[1]]).clone()
            }
            NodeKind::S => h.s().get(vals[outs[0]], vals[ins[0]]).clone(),
            NodeKind::SInv => h.s_inv().get(vals[outs[0]], vals[ins[0]]).clone(),
            NodeKind::Id => {
                if vals[outs[0]] == vals[ins[0]] {
                    field.one()
                } else {
                    field.zero()
                }
            }
            NodeKind::Eta => h.unit()[vals[outs[0]]].clone(),
            NodeKind::Eps => h.counit()[vals[ins[0]]].clone(),
            NodeKind::Endo(_) => {
                endos[nd].expect("checked above").get(vals[outs[0]], vals[ins[0]]).clone()
            }
        }
    };

    let rows = n.pow(d.outputs as u32);
    let cols = n.pow(d.inputs as u32);
    let mut mat = Mat::zeros(field, rows, cols);
    let mut vals = vec![0usize; wire_count];

    // Depth-first over wire labellings.
    fn sweep(
        depth: usize,
        acc: Scalar,
        n: usize,
        vals: &mut Vec<usize>,
        ready_at: &[Vec<usize>],
        factor: &dyn Fn(usize, &[usize]) -> Scalar,
        emit: &mut dyn FnMut(&[usize], &Scalar),
    ) {
        if depth == vals.len() {
            emit(vals, &acc);
            return;
        }
        'values: for v in 0..n {
            vals[depth] = v;
            let mut here = acc.clone();
            for &nd in &ready_at[depth] {
                let f = factor(nd, vals);
                if f.is_zero() {
                    continue 'values;
                }
                here = here.mul(&f);
            }
            sweep(depth + 1, here, n, vals, ready_at, factor, emit);
        }
    }

    let mut emit = |vals: &[usize], acc: &Scalar| {
        let mut r = 0;
        for &w in &pm.diag_out {
            r = r * n + vals[w];
        }
        let mut c = 0;
        for &w in &pm.diag_in {
            c = c * n + vals[w];
        }
        let updated = mat.get(r, c).add(acc);
        mat.set(r, c, updated);
    };
    if wire_count == 0 {
        emit(&vals, &field.one());
    } else {
        sweep(0, field.one(), n, &mut vals, &ready_at, &factor, &mut emit);
    }
    Ok(TensorValue::new(n, d.inputs, d.outputs, mat))
}

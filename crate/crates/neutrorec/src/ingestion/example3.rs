//! Built-in medical-diagnosis corpus (four patients, one disease) and the
//! golden values derived from it, plus the two-record algebra example.
//!
//! Golden numbers are stored exactly as printed, truncation included.

use crate::algebra::{LabeledNSet, NrsRecord};

/// Patient names in record order.
pub const EXAMPLE3_PATIENTS: [&str; 4] = ["Alex", "Linda", "Bill", "John"];
/// Crisp ages in record order.
pub const EXAMPLE3_AGES: [f64; 4] = [30.0, 40.0, 50.0, 55.0];
/// Crisp temperatures (°C) in record order.
pub const EXAMPLE3_TEMPERATURES: [f64; 4] = [4.0, 15.0, 22.0, 28.0];

pub const AGE_LABELS: [&str; 3] = ["old", "middle", "young"];
pub const TEMPERATURE_LABELS: [&str; 3] = ["cold", "medium", "hot"];
pub const FEVER_LABELS: [&str; 3] = ["L1", "L2", "L3"];

type Row = [(f64, f64, f64); 3];

const AGE: [Row; 4] = [
    [(0.0, 0.8, 1.0), (0.25, 0.25, 0.5), (0.75, 0.16, 0.25)],
    [(1.0, 0.0, 1.0), (1.0, 0.6, 0.0), (0.25, 1.0, 1.0)],
    [(0.75, 0.0, 0.5), (1.0, 0.4, 0.0), (0.0, 1.0, 1.0)],
    [(0.4, 1.0, 0.8), (0.75, 0.0, 0.25), (0.0, 1.0, 1.0)],
];

const TEMPERATURE: [Row; 4] = [
    [(0.64, 0.4, 0.1), (0.73, 0.33, 0.6), (0.6, 0.8, 0.09)],
    [(0.66, 0.66, 0.5), (0.25, 0.55, 0.57), (0.47, 0.43, 0.22)],
    [(0.53, 0.23, 0.4), (0.8, 0.26, 0.57), (0.47, 0.5, 0.44)],
    [(0.13, 0.43, 0.1), (0.2, 0.06, 0.14), (0.11, 0.12, 0.11)],
];

const FEVER: [Row; 4] = [
    [(0.5, 0.3, 0.5), (0.4, 0.7, 0.1), (0.7, 0.0, 0.0)],
    [(0.9, 0.1, 0.3), (0.0, 0.0, 0.8), (0.7, 0.0, 0.5)],
    [(0.15, 0.03, 0.01), (0.24, 0.75, 0.16), (0.8, 0.3, 0.1)],
    [(0.55, 0.0, 0.0), (0.0, 0.7, 0.9), (0.4, 0.4, 0.4)],
];

fn set(names: [&str; 3], row: &Row) -> LabeledNSet {
    LabeledNSet::from_pairs(names.iter().copied().zip(row.iter().copied())).expect("built-in triples are valid")
}

/// The four patient records: age labels in `x`, temperature labels in `y`
/// and the fever levels as the single disease in `d`.
pub fn builtin_example3() -> Vec<NrsRecord> {
    (0..4)
        .map(|k| {
            NrsRecord::new(
                set(AGE_LABELS, &AGE[k]),
                set(TEMPERATURE_LABELS, &TEMPERATURE[k]),
                vec![set(FEVER_LABELS, &FEVER[k])],
            )
            .expect("one disease")
        })
        .collect()
}

/// Record pairs in table order: (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Printed `(S_X, S_Y, S_D)` per pair, in [`PAIRS`] order.
pub const TABLE7: [[f64; 3]; 6] = [
    [0.4316, 0.20833, 0.2666],
    [0.39833, 0.11166, 0.15833],
    [0.29, 0.2866, 0.28333],
    [0.15833, 0.2, 0.31666],
    [0.30833, 0.23, 0.25833],
    [0.2333, 0.23, 0.25666],
];

/// Printed pair-measure matrix under the max–min measure.
pub const TABLE8: [[f64; 6]; 6] = [
    [0.20833, 0.20833, 0.2866, 0.20833, 0.23, 0.23],
    [0.20833, 0.11166, 0.2866, 0.2, 0.23, 0.23],
    [0.2866, 0.2866, 0.2866, 0.2866, 0.2866, 0.2866],
    [0.20833, 0.2, 0.2866, 0.2, 0.23, 0.23],
    [0.23, 0.23, 0.2866, 0.23, 0.23, 0.23],
    [0.23, 0.23, 0.2866, 0.23, 0.23, 0.23],
];

/// Printed matrix under intersection + probabilistic sum.
pub const TABLE9: [[f64; 6]; 6] = [
    [0.83878, 0.67171, 0.90812, 0.74606, 0.84832, 0.82904],
    [0.67171, 0.50464, 0.74105, 0.57899, 0.68124, 0.66197],
    [0.90812, 0.74105, 0.97746, 0.8154, 0.91765, 0.89838],
    [0.74606, 0.57899, 0.8154, 0.65334, 0.75559, 0.73632],
    [0.84832, 0.68124, 0.91765, 0.75559, 0.85784, 0.83857],
    [0.82904, 0.66197, 0.89838, 0.73632, 0.83857, 0.8193],
];

/// Printed matrix under intersection + bold sum.
pub const TABLE10: [[f64; 6]; 6] = [
    [0.22555, 0.12822, 0.27067, 0.17018, 0.23192, 0.22003],
    [0.12822, 0.07289, 0.15387, 0.09674, 0.13184, 0.12508],
    [0.27067, 0.15387, 0.32482, 0.20422, 0.27831, 0.26404],
    [0.17018, 0.09674, 0.20422, 0.12840, 0.17498, 0.16601],
    [0.23192, 0.13184, 0.27831, 0.17498, 0.23846, 0.22624],
    [0.22003, 0.12508, 0.26404, 0.16601, 0.22624, 0.21464],
];

/// Printed matrix under union + bounded difference.
pub const TABLE11: [[f64; 6]; 6] = [
    [0.44654, 0.50994, 0.22667, 0.2237, 0.3016, 0.22657],
    [0.50994, 0.57334, 0.29007, 0.28667, 0.365, 0.28997],
    [0.22667, 0.29007, 0.0068, 0.0034, 0.08173, 0.0067],
    [0.2237, 0.28667, 0.0034, 0.0, 0.07833, 0.0033],
    [0.3016, 0.365, 0.08173, 0.07833, 0.15666, 0.08163],
    [0.22657, 0.28997, 0.0067, 0.0033, 0.08163, 0.006],
];

/// Printed matrix under symmetric difference (signed).
pub const TABLE12: [[f64; 6]; 6] = [
    [0.33, 0.405, 0.17167, 0.00667, 0.215, 0.14164],
    [0.405, 0.48, 0.24667, 0.08167, 0.29, 0.21664],
    [0.17167, 0.24667, 0.01334, -0.15166, 0.05667, -0.01669],
    [0.00667, 0.08167, -0.15166, -0.31666, -0.10833, -0.18169],
    [0.215, 0.29, 0.05667, -0.10833, 0.1, 0.02664],
    [0.14164, 0.21664, -0.01669, -0.18169, 0.02664, -0.04672],
];

/// The two-record algebra example. Disease `k` of the example rates the
/// elements of X and Y; record `k` pairs `X_k`, `Y_k` with disease `k`.
#[derive(Debug, Clone)]
pub struct Example4 {
    pub x: [LabeledNSet; 2],
    pub y: [LabeledNSet; 2],
    /// Disease ratings over X's elements.
    pub dx: [LabeledNSet; 2],
    /// Disease ratings over Y's elements.
    pub dy: [LabeledNSet; 2],
}

const X_NAMES: [&str; 3] = ["x1", "x2", "x3"];
const Y_NAMES: [&str; 3] = ["y1", "y2", "y3"];

pub fn example4() -> Example4 {
    let xs = |r: &Row| set(X_NAMES, r);
    let ys = |r: &Row| set(Y_NAMES, r);
    Example4 {
        x: [
            xs(&[(0.3, 0.5, 0.8), (0.0, 1.0, 0.0), (0.5, 0.2, 0.6)]),
            xs(&[(0.4, 0.3, 0.7), (0.0, 1.0, 0.0), (0.8, 0.0, 0.5)]),
        ],
        y: [
            ys(&[(0.0, 0.7, 0.0), (0.4, 0.8, 0.6), (0.2, 0.7, 0.4)]),
            ys(&[(0.4, 0.5, 0.8), (0.3, 0.4, 0.7), (0.0, 0.8, 0.0)]),
        ],
        dx: [
            xs(&[(0.0, 1.0, 0.5), (1.0, 0.0, 0.5), (0.4, 1.0, 0.4)]),
            xs(&[(0.3, 0.4, 0.1), (0.5, 0.2, 0.4), (0.6, 0.5, 0.2)]),
        ],
        dy: [
            ys(&[(0.0, 0.6, 0.2), (0.0, 0.8, 0.5), (0.8, 0.0, 0.4)]),
            ys(&[(0.2, 0.7, 0.1), (0.8, 0.2, 0.1), (0.8, 0.5, 0.2)]),
        ],
    }
}

impl Example4 {
    /// Record `k`: `(X_k, Y_k, {D_k})` with the disease's X and Y ratings
    /// concatenated into one labeled set.
    pub fn record(&self, k: usize) -> NrsRecord {
        let d = LabeledNSet::concat(&[self.dx[k].clone(), self.dy[k].clone()]).expect("x and y names are disjoint");
        NrsRecord::new(self.x[k].clone(), self.y[k].clone(), vec![d]).expect("one disease")
    }
}

/// Printed cells of the algebra table, per element in `x1..x3` / `y1..y3` order.
pub mod table6 {
    type Cells = [(f64, f64, f64); 3];

    pub const UNION_X: Cells = [(0.4, 0.3, 0.7), (0.0, 1.0, 0.0), (0.8, 0.2, 0.5)];
    pub const UNION_Y: Cells = [(0.4, 0.5, 0.0), (0.4, 0.4, 0.6), (0.2, 0.7, 0.0)];
    pub const INTERSECTION_X: Cells = [(0.3, 0.5, 0.8), (0.0, 1.0, 0.0), (0.5, 0.2, 0.6)];
    pub const INTERSECTION_Y: Cells = [(0.0, 0.7, 0.8), (0.3, 0.8, 0.7), (0.0, 0.8, 0.4)];
    pub const BOUNDED_DIFF_X: Cells = [(0.0, 0.2, 0.1), (0.0, 0.0, 0.0), (0.0, 0.2, 0.1)];
    pub const BOUNDED_DIFF_Y: Cells = [(0.0, 0.2, 0.0), (0.1, 0.4, 0.0), (0.2, 0.0, 0.4)];
    pub const BOUNDED_DIFF_DX: Cells = [(0.0, 0.6, 0.4), (0.5, 0.0, 0.1), (0.0, 0.5, 0.2)];
    pub const BOUNDED_DIFF_DY: Cells = [(0.0, 0.0, 0.1), (0.0, 0.6, 0.4), (0.0, 0.0, 0.2)];
    pub const PROB_SUM_DX: Cells = [(0.3, 1.0, 0.55), (1.0, 0.2, 0.7), (0.76, 1.0, 0.52)];
    pub const PROB_SUM_DY: Cells = [(0.2, 0.88, 0.28), (0.8, 0.84, 0.55), (0.96, 0.5, 0.52)];
}

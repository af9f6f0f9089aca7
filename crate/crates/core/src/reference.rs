//! Benchmark values for the Hulthén family at `a = b = 1`, `m = 1`.
//!
//! Table A: partial sums `S_0..S_10` at `λ = 0.05`, `l = 1`, for six
//! configurations, plus the converged numerical eigenvalues. Table B: `S_5`
//! and percentage errors for `n = 1`, `l = 1` over `λ = 0.05..0.15`.

/// Which couplings are switched on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coupling {
    Vector,
    Scalar,
    Mixed,
}

impl Coupling {
    pub const ALL: [Coupling; 3] = [Coupling::Vector, Coupling::Scalar, Coupling::Mixed];

    /// `(a, b)` for unit strength.
    pub fn strengths(self) -> (f64, f64) {
        match self {
            Coupling::Vector => (1.0, 0.0),
            Coupling::Scalar => (0.0, 1.0),
            Coupling::Mixed => (1.0, 1.0),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Coupling::Vector => "E_V",
            Coupling::Scalar => "E_W",
            Coupling::Mixed => "E_VW",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumColumn {
    pub n: u32,
    pub l: u32,
    pub coupling: Coupling,
    pub lambda: f64,
    pub sums: [f64; 11],
    pub numerical: f64,
}

pub const PARTIAL_SUM_LAMBDA: f64 = 0.05;

pub const PARTIAL_SUM_COLUMNS: [PartialSumColumn; 6] = [
    PartialSumColumn {
        n: 1,
        l: 1,
        coupling: Coupling::Vector,
        lambda: PARTIAL_SUM_LAMBDA,
        sums: [
            0.9341723590, 0.9591723590, 0.9570741392, 0.9570741392, 0.9570686998, 0.9570686998,
            0.9570686381, 0.9570686381, 0.9570686368, 0.9570686368, 0.9570686367,
        ],
        numerical: 0.9570686367,
    },
    PartialSumColumn {
        n: 1,
        l: 1,
        coupling: Coupling::Scalar,
        lambda: PARTIAL_SUM_LAMBDA,
        sums: [
            0.9530618622, 0.9768884088, 0.9738581555, 0.9739339118, 0.9739202644, 0.9739211933,
            0.9739209078, 0.9739209397, 0.9739209276, 0.9739209295, 0.9739209288,
        ],
        numerical: 0.9739209289,
    },
    PartialSumColumn {
        n: 1,
        l: 1,
        coupling: Coupling::Mixed,
        lambda: PARTIAL_SUM_LAMBDA,
        sums: [
            0.8000000000, 0.8450000000, 0.8423958333, 0.8424609375, 0.8424540955, 0.8424545273,
            0.8424544790, 0.8424544833, 0.8424544828, 0.8424544828, 0.8424544828,
        ],
        numerical: 0.8424544828,
    },
    PartialSumColumn {
        n: 2,
        l: 1,
        coupling: Coupling::Vector,
        lambda: PARTIAL_SUM_LAMBDA,
        sums: [
            0.9638612635, 0.9888612635, 0.9848180151, 0.9848180151, 0.9847983143, 0.9847983143,
            0.9847977509, 0.9847977509, 0.9847977150, 0.9847977150, 0.9847977119,
        ],
        numerical: 0.9847977115,
    },
    PartialSumColumn {
        n: 2,
        l: 1,
        coupling: Coupling::Scalar,
        lambda: PARTIAL_SUM_LAMBDA,
        sums: [
            0.9726183555, 0.9969338144, 0.9915208448, 0.9916561690, 0.9916167626, 0.9916195489,
            0.9916177074, 0.9916179261, 0.9916177253, 0.9916177586, 0.9916177282,
        ],
        numerical: 0.9916177295,
    },
    PartialSumColumn {
        n: 2,
        l: 1,
        coupling: Coupling::Mixed,
        lambda: PARTIAL_SUM_LAMBDA,
        sums: [
            0.8823529412, 0.9294117647, 0.9246200980, 0.9247398897, 0.9247202876, 0.9247216080,
            0.9247213732, 0.9247213972, 0.9247213921, 0.9247213928, 0.9247213926,
        ],
        numerical: 0.9247213926,
    },
];

/// One row of the screening scan: `S_5` and percentage error per coupling,
/// in the order vector, scalar, mixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScreeningRow {
    pub lambda: f64,
    pub energy: [f64; 3],
    pub error_pct: [f64; 3],
}

pub const SCREENING_N: u32 = 1;
pub const SCREENING_L: u32 = 1;
pub const SCREENING_ORDER: usize = 5;

const fn row(lambda: f64, ev: f64, pv: f64, ew: f64, pw: f64, evw: f64, pvw: f64) -> ScreeningRow {
    ScreeningRow {
        lambda,
        energy: [ev, ew, evw],
        error_pct: [pv, pw, pvw],
    }
}

pub const SCREENING_ROWS: [ScreeningRow; 11] = [
    row(0.05, 0.95706870, 0.00001, 0.97392119, 0.00003, 0.84245453, 0.00001),
    row(0.06, 0.96113964, 0.00002, 0.97739507, 0.00008, 0.85034939, 0.00002),
    row(0.07, 0.96503895, 0.00005, 0.98064017, 0.00020, 0.85805052, 0.00004),
    row(0.08, 0.96876527, 0.00011, 0.98365749, 0.00045, 0.86555969, 0.00008),
    row(0.09, 0.97231703, 0.00023, 0.98644772, 0.00091, 0.87287852, 0.00016),
    row(0.10, 0.97569245, 0.00044, 0.98901136, 0.00171, 0.88000851, 0.00030),
    row(0.11, 0.97888956, 0.00080, 0.99134866, 0.00307, 0.88695104, 0.00052),
    row(0.12, 0.98190615, 0.00138, 0.99345974, 0.00527, 0.89370738, 0.00086),
    row(0.13, 0.98473983, 0.00229, 0.99534457, 0.00873, 0.90027874, 0.00137),
    row(0.14, 0.98738798, 0.00369, 0.99700303, 0.01414, 0.90666626, 0.00210),
    row(0.15, 0.98984779, 0.00577, 0.99843492, 0.02255, 0.91287103, 0.00312),
];

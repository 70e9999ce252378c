//! Frozen decision table shared by the verdict tests and the acceptance
//! suite. `EXPECTED[q][r - 1]` holds one character per p = 0..=4, worked out
//! by hand from the defining inequalities before the classifier existed:
//! V = valid for every graph, I = refuted by a witness family, U = open.

use alphamu_cli::verdict::TripleStatus;

pub const EXPECTED: [[&str; 8]; 5] = [
    // q = 0
    [
        "VIIII", "VIIII", "VIIII", "VIIII", "VIIII", "VIIII", "VIIII", "VIIII",
    ],
    // q = 1
    [
        "VIIII", "VVIII", "VVIII", "VVUII", "VVUII", "VVUUI", "VVUUI", "VVUUU",
    ],
    // q = 2
    [
        "VIIII", "VVVVV", "VVVII", "VVVVV", "VVVVU", "VVVVV", "VVVVV", "VVVVV",
    ],
    // q = 3
    [
        "VIIII", "VVVVV", "VVVVV", "VVVVV", "VVVVV", "VVVVV", "VVVVV", "VVVVV",
    ],
    // q = 4
    [
        "VIIII", "VVVVV", "VVVVV", "VVVVV", "VVVVV", "VVVVV", "VVVVV", "VVVVV",
    ],
];

pub fn status_char(s: TripleStatus) -> char {
    match s {
        TripleStatus::ValidByTheorem => 'V',
        TripleStatus::InvalidWithWitnessFamily => 'I',
        TripleStatus::Unknown => 'U',
    }
}

pub fn expected_char(p: usize, q: usize, r: usize) -> char {
    EXPECTED[q][r - 1].as_bytes()[p] as char
}

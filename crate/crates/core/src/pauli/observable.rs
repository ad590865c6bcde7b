use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{DenseMatrix, PauliError};

pub const MAX_QUBITS: usize = 8;

/// Power of `i` multiplying a Pauli string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase(u8);

impl Phase {
    pub const PLUS_ONE: Phase = Phase(0);
    pub const PLUS_I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(e: u8) -> Self {
        Phase(e % 4)
    }

    /// Exponent `k` in `i^k`.
    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// `+1` or `-1` for real phases.
    pub fn sign(self) -> Option<i8> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn times(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }
}

/// Single-qubit factor of a Pauli string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    I,
    X,
    Y,
    Z,
}

impl Factor {
    fn bits(self) -> (bool, bool) {
        match self {
            Factor::I => (false, false),
            Factor::X => (true, false),
            Factor::Y => (true, true),
            Factor::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Factor::I,
            (true, false) => Factor::X,
            (true, true) => Factor::Y,
            (false, true) => Factor::Z,
        }
    }

    fn letter(self) -> char {
        match self {
            Factor::I => 'I',
            Factor::X => 'X',
            Factor::Y => 'Y',
            Factor::Z => 'Z',
        }
    }
}

/// An `n`-qubit Pauli operator `i^phase · P_0 ⊗ … ⊗ P_{n-1}` in symplectic
/// form. Bit `k` of `x_bits`/`z_bits` is the `k`-th tensor factor counted
/// from the left; `(1,1)` is the Hermitian `Y`, so phases `±1` are exactly
/// the Hermitian operators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliObservable {
    n: u8,
    phase: Phase,
    x_bits: u8,
    z_bits: u8,
}

impl PauliObservable {
    pub fn new(n: usize, phase: Phase, x_bits: u8, z_bits: u8) -> Result<Self, PauliError> {
        if n == 0 || n > MAX_QUBITS {
            return Err(PauliError::QubitCount(n));
        }
        let mask = mask(n);
        if x_bits & !mask != 0 || z_bits & !mask != 0 {
            return Err(PauliError::BitsOutOfRange { n });
        }
        Ok(PauliObservable {
            n: n as u8,
            phase,
            x_bits,
            z_bits,
        })
    }

    pub fn identity(n: usize) -> Result<Self, PauliError> {
        Self::new(n, Phase::PLUS_ONE, 0, 0)
    }

    pub fn from_factors(phase: Phase, factors: &[Factor]) -> Result<Self, PauliError> {
        let (mut x, mut z) = (0u8, 0u8);
        for (k, f) in factors.iter().enumerate().take(MAX_QUBITS) {
            let (fx, fz) = f.bits();
            x |= (fx as u8) << k;
            z |= (fz as u8) << k;
        }
        Self::new(factors.len(), phase, x, z)
    }

    /// Phase-free observable with projective index `index` (see
    /// [`PauliObservable::projective_index`]).
    pub fn from_projective_index(n: usize, index: usize) -> Result<Self, PauliError> {
        if n == 0 || n > MAX_QUBITS || index >= 1usize << (2 * n) {
            return Err(PauliError::QubitCount(n));
        }
        let mut factors = Vec::with_capacity(n);
        for k in 0..n {
            let digit = (index >> (2 * (n - 1 - k))) & 3;
            factors.push([Factor::I, Factor::X, Factor::Y, Factor::Z][digit]);
        }
        Self::from_factors(Phase::PLUS_ONE, &factors)
    }

    /// All `4^n - 1` nonidentity Hermitian observables (phase `+1`), ordered
    /// lexicographically by their `I < X < Y < Z` string.
    pub fn nonidentity(n: usize) -> Result<Vec<Self>, PauliError> {
        (1..1usize << (2 * n))
            .map(|i| Self::from_projective_index(n, i))
            .collect()
    }

    pub fn qubits(&self) -> usize {
        self.n as usize
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn x_bits(&self) -> u8 {
        self.x_bits
    }

    pub fn z_bits(&self) -> u8 {
        self.z_bits
    }

    pub fn factor(&self, k: usize) -> Factor {
        Factor::from_bits(self.x_bits >> k & 1 == 1, self.z_bits >> k & 1 == 1)
    }

    pub fn factors(&self) -> Vec<Factor> {
        (0..self.qubits()).map(|k| self.factor(k)).collect()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x_bits == 0 && self.z_bits == 0
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_real()
    }

    /// Base-4 index of the phase-free string (`I=0, X=1, Y=2, Z=3`, leftmost
    /// factor most significant). Identity is 0.
    pub fn projective_index(&self) -> usize {
        (0..self.qubits()).fold(0usize, |acc, k| {
            let digit = match self.factor(k) {
                Factor::I => 0,
                Factor::X => 1,
                Factor::Y => 2,
                Factor::Z => 3,
            };
            acc * 4 + digit
        })
    }

    /// Same operator with phase `+1`.
    pub fn hermitian_representative(&self) -> Self {
        PauliObservable {
            phase: Phase::PLUS_ONE,
            ..*self
        }
    }

    pub fn with_phase(&self, phase: Phase) -> Self {
        PauliObservable { phase, ..*self }
    }

    /// Binary symplectic form; `0` iff the operators commute.
    pub fn symplectic_form(&self, other: &Self) -> u8 {
        let s = (self.x_bits & other.z_bits) ^ (self.z_bits & other.x_bits);
        (s.count_ones() % 2) as u8
    }

    pub fn commutes(&self, other: &Self) -> Result<bool, PauliError> {
        self.check_same(other)?;
        Ok(self.symplectic_form(other) == 0)
    }

    /// Exact product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self, PauliError> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut e = i32::from(self.phase.0) + i32::from(other.phase.0);
        for k in 0..self.qubits() {
            let x1 = i32::from(self.x_bits >> k & 1);
            let z1 = i32::from(self.z_bits >> k & 1);
            let x2 = i32::from(other.x_bits >> k & 1);
            let z2 = i32::from(other.z_bits >> k & 1);
            e += match (x1, z1) {
                (0, 0) => 0,
                (1, 1) => z2 - x2,
                (1, 0) => z2 * (2 * x2 - 1),
                _ => x2 * (1 - 2 * z2),
            };
        }
        PauliObservable {
            n: self.n,
            phase: Phase(e.rem_euclid(4) as u8),
            x_bits: self.x_bits ^ other.x_bits,
            z_bits: self.z_bits ^ other.z_bits,
        }
    }

    pub fn to_matrix(&self) -> DenseMatrix {
        let factors = self.factors();
        let mut m = DenseMatrix::identity(1);
        for f in factors {
            m = m.kron(&DenseMatrix::single_qubit(f));
        }
        m.scale(super::matrix::phase_value(self.phase))
    }

    fn check_same(&self, other: &Self) -> Result<(), PauliError> {
        if self.n != other.n {
            Err(PauliError::QubitMismatch(self.qubits(), other.qubits()))
        } else {
            Ok(())
        }
    }
}

fn mask(n: usize) -> u8 {
    if n >= 8 {
        0xff
    } else {
        (1u8 << n) - 1
    }
}

impl fmt::Display for PauliObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase.0 {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{prefix}")?;
        for k in 0..self.qubits() {
            write!(f, "{}", self.factor(k).letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl FromStr for PauliObservable {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (phase, body) = if let Some(r) = t.strip_prefix("-i") {
            (Phase::MINUS_I, r)
        } else if let Some(r) = t.strip_prefix("+i") {
            (Phase::PLUS_I, r)
        } else if let Some(r) = t.strip_prefix('i') {
            (Phase::PLUS_I, r)
        } else if let Some(r) = t.strip_prefix('-') {
            (Phase::MINUS_ONE, r)
        } else if let Some(r) = t.strip_prefix('+') {
            (Phase::PLUS_ONE, r)
        } else {
            (Phase::PLUS_ONE, t)
        };
        let factors = body
            .chars()
            .map(|c| match c {
                'I' => Ok(Factor::I),
                'X' => Ok(Factor::X),
                'Y' => Ok(Factor::Y),
                'Z' => Ok(Factor::Z),
                _ => Err(PauliError::Parse(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if factors.is_empty() {
            return Err(PauliError::Parse(s.to_string()));
        }
        if factors.len() > MAX_QUBITS {
            return Err(PauliError::QubitCount(factors.len()));
        }
        Self::from_factors(phase, &factors)
    }
}

impl Serialize for PauliObservable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliObservable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

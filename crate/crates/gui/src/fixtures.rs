//! Witness fixtures transcribed from the hand-worked case tables for
//! mat(n, gf(2)), n in {3, 4}. Each entry is re-verified exactly: U, U + B
//! and U + C must all be invertible. The builders mirror the table notation:
//! direct sums of identity/Jordan/companion blocks and powers of the
//! parameterized companions N_3(a, b) and N_4(a, b, c).

use ring_core::gf2::Gf2Mat;

fn from_rows(rows: &[u8]) -> Gf2Mat {
    let mut m = Gf2Mat::zero(rows.len());
    m.rows[..rows.len()].copy_from_slice(rows);
    m
}

/// Identity of size k.
pub fn i(k: usize) -> Gf2Mat {
    Gf2Mat::identity(k)
}

/// The 1x1 blocks.
pub fn one() -> Gf2Mat {
    from_rows(&[1])
}

pub fn zero1() -> Gf2Mat {
    from_rows(&[0])
}

/// N_2 = rows (0 1),(1 1).
pub fn n2() -> Gf2Mat {
    from_rows(&[0b10, 0b11])
}

/// N_3(a, b): subdiagonal ones, last column (1, b, a).
pub fn n3(a: u8, b: u8) -> Gf2Mat {
    from_rows(&[0b100, 0b001 | (b << 2), 0b010 | (a << 2)])
}

/// N_4(a, b, c): subdiagonal ones, last column (1, c, b, a).
pub fn n4(a: u8, b: u8, c: u8) -> Gf2Mat {
    from_rows(&[0b1000, 0b0001 | (c << 3), 0b0010 | (b << 3), 0b0100 | (a << 3)])
}

/// Unipotent Jordan block of size k.
pub fn jnf(k: usize) -> Gf2Mat {
    let mut m = Gf2Mat::identity(k);
    for idx in 0..k - 1 {
        m.set(idx, idx + 1, true);
    }
    m
}

/// Nilpotent Jordan block of size k.
pub fn jnf0(k: usize) -> Gf2Mat {
    let mut m = Gf2Mat::zero(k);
    for idx in 0..k.saturating_sub(1) {
        m.set(idx, idx + 1, true);
    }
    m
}

pub fn pow(m: &Gf2Mat, e: u32) -> Gf2Mat {
    let mut acc = Gf2Mat::identity(m.n);
    for _ in 0..e {
        acc = acc.mul(m);
    }
    acc
}

pub fn dsum(blocks: &[Gf2Mat]) -> Gf2Mat {
    let mut acc = blocks[0];
    for b in &blocks[1..] {
        acc = acc.direct_sum(b);
    }
    acc
}

/// One transcribed case: (label, B, C, U).
pub struct Fixture {
    pub label: &'static str,
    pub b: Gf2Mat,
    pub c: Gf2Mat,
    pub u: Gf2Mat,
}

/// The transcribed table. Every entry is checked by `verify_fixtures`.
pub fn fixtures() -> Vec<Fixture> {
    let i3 = i(3);
    let i2_0 = dsum(&[i(2), zero1()]);
    vec![
        // n = 3, B = I, C invertible
        Fixture {
            label: "n3 B=I C=N2+1",
            b: i3,
            c: dsum(&[n2(), one()]),
            u: from_rows(&[0b101, 0b111, 0b110]),
        },
        Fixture {
            label: "n3 B=I C=JNF(3)",
            b: i3,
            c: jnf(3),
            // printed entry (rows 111/011/110) fails at U + C; N_3(0,1) works
            u: n3(0, 1),
        },
        Fixture {
            label: "n3 B=I C=JNF(2)+1",
            b: i3,
            c: dsum(&[jnf(2), one()]),
            u: from_rows(&[0b100, 0b001, 0b110]),
        },
        // n = 3, B = I, rank C = 2
        Fixture { label: "n3 B=I C=N2+0", b: i3, c: dsum(&[n2(), zero1()]), u: pow(&n3(0, 1), 3) },
        Fixture { label: "n3 B=I C=I2+0", b: i3, c: i2_0, u: pow(&n3(0, 1), 2) },
        Fixture { label: "n3 B=I C=JNF0(3)", b: i3, c: jnf0(3), u: n3(0, 1) },
        Fixture { label: "n3 B=I C=JNF0(2)+1", b: i3, c: dsum(&[jnf0(2), one()]), u: n3(1, 0) },
        Fixture { label: "n3 B=I C=JNF(2)+0", b: i3, c: dsum(&[jnf(2), zero1()]), u: n3(1, 0) },
        // n = 3, B = I, rank C = 1
        Fixture { label: "n3 B=I C=1+0+0", b: i3, c: dsum(&[one(), zero1(), zero1()]), u: n3(1, 0) },
        Fixture { label: "n3 B=I C=JNF0(2)+0", b: i3, c: dsum(&[jnf0(2), zero1()]), u: n3(0, 1) },
        // n = 3, B = I_2 + 0
        Fixture {
            label: "n3 B=I2+0 C=1+0+1",
            b: i2_0,
            c: dsum(&[one(), zero1(), one()]),
            // printed power 4 fails; power 2 of the same companion works
            u: pow(&n3(0, 1), 2),
        },
        Fixture {
            label: "n3 B=I2+0 C=JNF0(2)+1",
            b: i2_0,
            c: dsum(&[jnf0(2), one()]),
            u: pow(&n3(1, 0), 5),
        },
        Fixture { label: "n3 B=I2+0 C=I2+0", b: i2_0, c: i2_0, u: dsum(&[pow(&n2(), 2), one()]) },
        Fixture {
            label: "n3 B=I2+0 C=N2+0",
            b: i2_0,
            c: dsum(&[n2(), zero1()]),
            u: dsum(&[pow(&n2(), 2), one()]),
        },
        Fixture {
            label: "n3 B=I2+0 C=JNF(2)+0",
            b: i2_0,
            c: dsum(&[jnf(2), zero1()]),
            // printed power 4 fails; power 5 works
            u: pow(&n3(1, 0), 5),
        },
        // the Delta cases: C with first column (c1, c2, 0) and (3,2) entry 1
        Fixture {
            label: "n3 B=I2+0 C=delta c1=1 c2=0",
            b: i2_0,
            c: from_rows(&[0b001, 0b000, 0b010]),
            u: pow(&n3(0, 1), 2),
        },
        Fixture {
            label: "n3 B=I2+0 C=delta c1=c2=1",
            b: i2_0,
            c: from_rows(&[0b001, 0b001, 0b010]),
            // printed N_3(1,0)^3 fails; N_3(0,1)^6 works
            u: pow(&n3(0, 1), 6),
        },
        Fixture {
            label: "n3 B=I2+0 C=delta c1=0 c2=1",
            b: i2_0,
            c: from_rows(&[0b000, 0b001, 0b010]),
            // printed N_3(1,0)^5 fails; N_3(0,1)^3 works
            u: pow(&n3(0, 1), 3),
        },
        // antidiagonal-ish rank-2 cases
        Fixture {
            label: "n3 B=I2+0 C=swap-col3",
            b: i2_0,
            c: from_rows(&[0b100, 0b000, 0b010]),
            u: from_rows(&[0b010, 0b100, 0b001]), // cyclic permutation
        },
        Fixture {
            label: "n3 B=I2+0 C=swap-row3",
            b: i2_0,
            c: from_rows(&[0b000, 0b100, 0b010]),
            // the printed transpose-of-permutation fails; N_3(0,1)^3 works
            u: pow(&n3(0, 1), 3),
        },
        // rank C = 1 against B = I_2 + 0
        Fixture {
            label: "n3 B=I2+0 C=0+0+1",
            b: i2_0,
            c: dsum(&[zero1(), zero1(), one()]),
            u: from_rows(&[0b010, 0b100, 0b001]),
        },
        // rank B = 1 = rank C
        Fixture {
            label: "n3 B=1+0+0 C=0+1+0",
            b: dsum(&[one(), zero1(), zero1()]),
            c: dsum(&[zero1(), one(), zero1()]),
            u: dsum(&[from_rows(&[0b10, 0b01]), one()]), // swap + 1
        },
        Fixture {
            label: "n3 B=1+0+0 C=JNF0(2)+0",
            b: dsum(&[one(), zero1(), zero1()]),
            c: dsum(&[jnf0(2), zero1()]),
            u: from_rows(&[0b100, 0b010, 0b001]), // antidiagonal
        },
        // n = 4, B = I, C invertible
        Fixture {
            label: "n4 B=I C=N3(1,1)+1",
            b: i(4),
            c: dsum(&[n3(1, 1), one()]),
            // printed power 3 fails; power 2 works (swapped with the next line)
            u: pow(&n4(1, 1, 1), 2),
        },
        Fixture {
            label: "n4 B=I C=N2+I2",
            b: i(4),
            c: dsum(&[n2(), i(2)]),
            u: dsum(&[pow(&n2(), 2), n2()]),
        },
        Fixture {
            label: "n4 B=I C=N2+JNF(2)",
            b: i(4),
            c: dsum(&[n2(), jnf(2)]),
            // printed power 2 fails; power 3 works (swapped with the previous line)
            u: pow(&n4(1, 1, 1), 3),
        },
        Fixture { label: "n4 B=I C=JNF(4)", b: i(4), c: jnf(4), u: n4(1, 0, 0) },
        Fixture {
            label: "n4 B=I C=JNF(3)+1",
            b: i(4),
            c: dsum(&[jnf(3), one()]),
            u: n4(1, 0, 0),
        },
        Fixture {
            label: "n4 B=I C=JNF(2)+JNF(2)",
            b: i(4),
            c: dsum(&[jnf(2), jnf(2)]),
            u: n4(1, 0, 0),
        },
        Fixture {
            label: "n4 B=I C=JNF(2)+I2",
            b: i(4),
            c: dsum(&[jnf(2), i(2)]),
            u: n4(0, 1, 0),
        },
        // n = 4, B = I, C of rank 3
        Fixture {
            label: "n4 B=I C=N3(0,0)+0",
            b: i(4),
            c: dsum(&[n3(0, 0), zero1()]),
            // printed N_4(1, tr, tr) with tr = 0 fails; N_4(1,1,1)^2 works
            u: pow(&n4(1, 1, 1), 2),
        },
        Fixture {
            label: "n4 B=I C=N3(1,1)+0",
            b: i(4),
            c: dsum(&[n3(1, 1), zero1()]),
            // printed N_4(1, tr, tr) with tr = 1 fails; its square works
            u: pow(&n4(1, 1, 1), 2),
        },
        Fixture {
            label: "n4 B=I C=N2+JNF0(2)",
            b: i(4),
            c: dsum(&[n2(), jnf0(2)]),
            u: pow(&n4(0, 0, 1), 2),
        },
        Fixture {
            label: "n4 B=I C=N2+1+0",
            b: i(4),
            c: dsum(&[n2(), one(), zero1()]),
            // the printed block sum N_2 (+) N_2^2 fails at U + C; N_4(1,1,1)^3 works
            u: pow(&n4(1, 1, 1), 3),
        },
        Fixture {
            label: "n4 B=I C=I3+0",
            b: i(4),
            c: dsum(&[i(3), zero1()]),
            u: dsum(&[n2(), pow(&n2(), 2)]),
        },
        Fixture {
            label: "n4 B=I C=JNF(2)+1+0",
            b: i(4),
            c: dsum(&[jnf(2), one(), zero1()]),
            // no block 2+2 witness exists for this C (the pair (I_2, JNF(2)) has
            // no witness in mat(2,gf(2))); N_4(1,0,0) works
            u: n4(1, 0, 0),
        },
        Fixture {
            label: "n4 B=I C=JNF(3)+0",
            b: i(4),
            c: dsum(&[jnf(3), zero1()]),
            // the printed block sum fails at U + C; N_4(1,1,1) works
            u: n4(1, 1, 1),
        },
        // n = 4, B = I_3 + 0
        Fixture {
            label: "n4 B=I3+0 C=JNF0(3)+1",
            b: dsum(&[i(3), zero1()]),
            c: dsum(&[jnf0(3), one()]),
            // printed N_4(0,0,1) fails at U + B; N_4(1,1,1)^3 works
            u: pow(&n4(1, 1, 1), 3),
        },
    ]
}

/// Verify every fixture exactly. Returns the labels of any failures.
pub fn verify_fixtures() -> Vec<&'static str> {
    fixtures()
        .iter()
        .filter(|f| {
            !(f.u.is_invertible()
                && f.u.add(&f.b).is_invertible()
                && f.u.add(&f.c).is_invertible())
        })
        .map(|f| f.label)
        .collect()
}

/// The small observation driving several cases: against N_2 the translates
/// by I, N_2^2 and diag(0,1) stay invertible; against N_2^2 the translates
/// by I, N_2 and diag(1,0) do.
pub fn observation_two_by_two_holds() -> bool {
    let candidates = [
        i(2),
        n2(),
        pow(&n2(), 2),
        from_rows(&[0b00, 0b10]), // diag(0,1)
        from_rows(&[0b01, 0b00]), // diag(1,0)
    ];
    let n2m = n2();
    let n2sq = pow(&n2(), 2);
    let inv_against_n2: Vec<bool> = candidates
        .iter()
        .map(|c| n2m.add(c).is_invertible())
        .collect();
    let inv_against_n2sq: Vec<bool> = candidates
        .iter()
        .map(|c| n2sq.add(c).is_invertible())
        .collect();
    inv_against_n2 == vec![true, false, true, true, false]
        && inv_against_n2sq == vec![true, true, false, false, true]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_reverify() {
        let failures = verify_fixtures();
        assert!(failures.is_empty(), "failing fixtures: {failures:?}");
    }

    #[test]
    fn spec_named_witnesses_exact() {
        // B = I, C = N_2 + (1): U has rows (1,0,1),(1,1,1),(0,1,1)
        let f = &fixtures()[0];
        assert_eq!(f.u, from_rows(&[0b101, 0b111, 0b110]));
        // B = I, C = JNF_0(3): U = N_3 with a = 0, b = 1
        let f = fixtures()
            .into_iter()
            .find(|f| f.label == "n3 B=I C=JNF0(3)")
            .unwrap();
        assert_eq!(f.u, n3(0, 1));
    }

    #[test]
    fn observation_bthr() {
        assert!(observation_two_by_two_holds());
    }

    #[test]
    fn n3_has_irreducible_charpoly_iff_a_ne_b() {
        // the parameterized companions behave as described
        for (a, b) in [(0, 1), (1, 0)] {
            let m = n3(a, b);
            assert!(m.is_invertible());
        }
    }
}

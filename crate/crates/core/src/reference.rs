//! Published benchmark values shipped with the crate.
//!
//! `table1_published.csv` lists the torsion-only comparison (numerical and
//! closed-form energies, eV). `table2_reference.csv` lists the first five
//! oscillator levels (eV) at 25 torsion values. Both are static data: they
//! are compared against, never regenerated.

const TABLE1_CSV: &str = include_str!("../data/table1_published.csv");
const TABLE2_CSV: &str = include_str!("../data/table2_reference.csv");

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Row {
    pub omega: f64,
    pub n: u32,
    pub m: i32,
    pub e_num_ev: f64,
    pub e_analytic_ev: f64,
    pub delta_ev: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table2Row {
    pub omega: f64,
    pub levels_ev: [f64; 5],
}

/// Torsion, longitudinal wavenumber (1/m) and oscillator frequency (rad/s)
/// behind the oscillator table.
pub const TABLE2_K: f64 = 1e9;
pub const TABLE2_OMEGA0: f64 = 2.0 * std::f64::consts::PI * 5e14;
pub const TABLE2_M: i32 = 1;
/// Wavenumber of the torsion-only comparison.
pub const TABLE1_K: f64 = 5e9;

fn data_rows(csv: &str) -> impl Iterator<Item = Vec<&str>> {
    csv.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(str::trim).collect())
}

fn num(s: &str) -> f64 {
    s.parse()
        .unwrap_or_else(|_| panic!("bad number {s:?} in shipped reference data"))
}

pub fn table1() -> Vec<Table1Row> {
    data_rows(TABLE1_CSV)
        .map(|f| Table1Row {
            omega: num(f[0]),
            n: f[1].parse().expect("n"),
            m: f[2].parse().expect("m"),
            e_num_ev: num(f[3]),
            e_analytic_ev: num(f[4]),
            delta_ev: num(f[5]),
        })
        .collect()
}

pub fn table2() -> Vec<Table2Row> {
    data_rows(TABLE2_CSV)
        .map(|f| Table2Row {
            omega: num(f[0]),
            levels_ev: [num(f[1]), num(f[2]), num(f[3]), num(f[4]), num(f[5])],
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_shape() {
        let rows = table1();
        assert_eq!(rows.len(), 27);
        assert_eq!(
            rows[0],
            Table1Row {
                omega: 2.0,
                n: 0,
                m: 1,
                e_num_ev: -3.0652,
                e_analytic_ev: -3.0692,
                delta_ev: 4e-3
            }
        );
        let worst = rows.iter().map(|r| r.delta_ev).fold(0.0, f64::max);
        assert_eq!(worst, 5.29e-2);
    }

    #[test]
    fn table2_shape() {
        let rows = table2();
        assert_eq!(rows.len(), 25);
        assert_eq!(rows[0].levels_ev, [112.1989, 252.4949, 448.9021, 701.4224, 1010.0567]);
        assert_eq!(rows[24].omega, 15.204082);
        // Equally spaced torsion values starting at 1 with step 29/49.
        for (i, r) in rows.iter().enumerate() {
            assert!((r.omega - (1.0 + 29.0 * i as f64 / 49.0)).abs() < 1e-6);
        }
    }
}

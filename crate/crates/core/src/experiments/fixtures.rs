//! Hand-made instances from a medical records table.

use crate::attrset::{AttrSet, SetFamily};
use crate::error::{Error, Result};
use crate::instance::Instance;

pub const MEDICAL_ATTRIBUTES: [&str; 10] = [
    "ZIP code",
    "birth date",
    "gender",
    "ethnicity",
    "weight",
    "diagnosis",
    "procedure",
    "medication",
    "charges",
    "hospital ID",
];

pub const MEDICAL_ROWS: usize = 5;

// Sets written as digit strings, "023" = {0,2,3}.
fn compact(sets: &[&str]) -> SetFamily {
    sets.iter()
        .map(|s| {
            s.chars()
                .map(|c| c.to_digit(10).expect("digit") as usize)
                .collect::<AttrSet>()
        })
        .collect()
}

/// Row `row` (1-based) of the medical fixture table.
pub fn medical_instance(row: usize) -> Result<Instance> {
    let (n, f, a): (usize, &[&str], &[&str]) = match row {
        1 => (
            6,
            &["023", "012", "014", "123"],
            &["125", "135", "025", "4"],
        ),
        2 => (6, &["023", "012", "014"], &["125", "135", "025", "4"]),
        3 => (10, &["045", "123", "89"], &["124", "458", "09", "238"]),
        4 => (
            10,
            &["13", "168", "34", "79", "036"],
            &["023", "012", "36", "46", "78", "07", "9"],
        ),
        5 => (
            10,
            &["02", "168", "34", "79", "03"],
            &["01", "128", "35", "46", "78", "04", "23", "9"],
        ),
        _ => return Err(Error::RowOutOfRange(row)),
    };
    let names = MEDICAL_ATTRIBUTES[..n]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Instance::new(n, compact(f), compact(a))?.with_names(names)
}

/// Four attributes named "1" to "4", one forbidden triple and three
/// required sets.
pub fn small_example_instance() -> Instance {
    Instance::new(4, compact(&["012"]), compact(&["03", "13", "2"]))
        .and_then(|i| i.with_names((1..=4).map(|i| i.to_string()).collect()))
        .expect("fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attrset::family;

    #[test]
    fn row1_is_the_medical_instance() {
        let inst = medical_instance(1).unwrap();
        assert_eq!(
            inst.forbidden(),
            &family(&[&[0, 2, 3], &[0, 1, 2], &[0, 1, 4], &[1, 2, 3]])
        );
        assert_eq!(
            inst.required(),
            &family(&[&[1, 2, 5], &[1, 3, 5], &[0, 2, 5], &[4]])
        );
        assert_eq!(inst.attribute_names().unwrap()[0], "ZIP code");
        assert_eq!(inst.attribute_names().unwrap()[5], "diagnosis");
    }

    #[test]
    fn row2_drops_one_forbidden_set() {
        let inst = medical_instance(2).unwrap();
        assert!(!inst.forbidden().contains(AttrSet::from([1, 2, 3])));
        assert_eq!(inst.forbidden().len(), 3);
    }

    #[test]
    fn row5() {
        let inst = medical_instance(5).unwrap();
        assert_eq!(inst.n(), 10);
        assert_eq!(
            inst.forbidden(),
            &family(&[&[0, 2], &[1, 6, 8], &[3, 4], &[7, 9], &[0, 3]])
        );
    }

    #[test]
    fn rows_are_feasible_and_bounded() {
        for row in 1..=MEDICAL_ROWS {
            assert!(medical_instance(row).unwrap().is_feasible(), "row {row}");
        }
        assert_eq!(medical_instance(0), Err(Error::RowOutOfRange(0)));
        assert_eq!(medical_instance(6), Err(Error::RowOutOfRange(6)));
    }
}

//! Embedded decimal expansions, truncated (not rounded) after the last digit.

/// π to 250 decimal places.
pub(crate) const PI_DIGITS: &str = concat!(
    "3.",
    "14159265358979323846264338327950288419716939937510",
    "58209749445923078164062862089986280348253421170679",
    "82148086513282306647093844609550582231725359408128",
    "48111745028410270193852110555964462294895493038196",
    "44288109756659334461284756482337867831652712019091",
);

/// e to 250 decimal places.
pub(crate) const E_DIGITS: &str = concat!(
    "2.",
    "71828182845904523536028747135266249775724709369995",
    "95749669676277240766303535475945713821785251664274",
    "27466391932003059921817413596629043572900334295260",
    "59563073813232862794349076323382988075319525101901",
    "15738341879307021540891499348841675092447614606680",
);

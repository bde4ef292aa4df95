//! Printed reference values the regenerated tables are compared against.

pub const TABLE1_EUCLIDEAN: f64 = 0.1;

pub const TABLE1_PROPOSED: [f64; 10] = [
    0.1048, 0.1154, 0.1259, 0.1348, 0.1400, 0.1400, 0.1348, 0.1259, 0.1154, 0.1048,
];

pub const TABLE2_SCORE_A: [f64; 10] = [-0.8, -0.6, -0.4, -0.2, 0.0, 0.2, 0.4, 0.6, 0.8, 1.0];
pub const TABLE2_SCORE_B: [f64; 10] = [-1.0, -0.8, -0.6, -0.4, -0.2, 0.0, 0.2, 0.4, 0.6, 0.8];

/// Method rows in output order.
pub const TABLE4: [(&str, [f64; 8]); 7] = [
    (
        "d_Hm",
        [
            0.1464, 0.1351, 0.1170, 0.1350, 0.1161, 0.1500, 0.1500, 0.1500,
        ],
    ),
    (
        "d_Eu",
        [
            0.1298, 0.1180, 0.1110, 0.1261, 0.1009, 0.1323, 0.1323, 0.1414,
        ],
    ),
    (
        "D_Hm",
        [
            0.1500, 0.1400, 0.1500, 0.1500, 0.1500, 0.0825, 0.1275, 0.1250,
        ],
    ),
    (
        "D_Eu",
        [
            0.1323, 0.1217, 0.1414, 0.1414, 0.1323, 0.0740, 0.1186, 0.1170,
        ],
    ),
    (
        "D_C(beta=1)",
        [
            0.1500, 0.1400, 0.1500, 0.1500, 0.1500, 0.0825, 0.1275, 0.1250,
        ],
    ),
    (
        "D_C(beta=2)",
        [
            0.1323, 0.1217, 0.1414, 0.1414, 0.1323, 0.0740, 0.1186, 0.1170,
        ],
    ),
    (
        "D_N",
        [
            0.1801, 0.1756, 0.1417, 0.1517, 0.1578, 0.0746, 0.0829, 0.0982,
        ],
    ),
];

/// Sample-major: S1 against P1..P3, then S2.
pub const WORKED_DISTANCES: [[f64; 3]; 2] = [[0.4470, 0.5134, 0.4511], [0.2076, 0.3294, 0.5127]];
pub const WORKED_ASSIGNMENTS: [&str; 2] = ["P1", "P1"];

pub struct ApplicationReference {
    /// Patient-major distance matrix.
    pub distances: [[f64; 5]; 4],
    pub judgments: [&'static str; 4],
    /// Judgments reported for other methods; context only.
    pub context: &'static [(&'static str, [&'static str; 4])],
}

pub const APPLICATION1: ApplicationReference = ApplicationReference {
    distances: [
        [0.2698, 0.2235, 0.2446, 0.5878, 0.6324],
        [0.2486, 0.2143, 0.2979, 0.0673, 0.5051],
        [0.2605, 0.4448, 0.1324, 0.4853, 0.5975],
        [0.1727, 0.2075, 0.3118, 0.5085, 0.5256],
    ],
    judgments: ["Malaria", "Stomach problem", "Typhoid", "Viral fever"],
    context: &[
        (
            "reference 1",
            ["Malaria", "Stomach problem", "Typhoid", "Malaria"],
        ),
        (
            "reference 2",
            ["Malaria", "Stomach problem", "Malaria", "Malaria"],
        ),
        (
            "reference 3",
            ["Malaria", "Stomach problem", "Typhoid", "Viral fever"],
        ),
        (
            "reference 4",
            ["Malaria", "Stomach problem", "Typhoid", "Viral fever"],
        ),
        (
            "reference 5",
            ["Malaria", "Stomach problem", "Typhoid", "Viral fever"],
        ),
    ],
};

pub const APPLICATION2: ApplicationReference = ApplicationReference {
    distances: [
        [0.5457, 0.4593, 0.5213, 0.4847, 0.6497],
        [0.2224, 0.5103, 0.2680, 0.3987, 0.4768],
        [0.6160, 0.6561, 0.5438, 0.3955, 0.6716],
        [0.5058, 0.4265, 0.4444, 0.4393, 0.5723],
    ],
    judgments: ["Malaria", "Viral fever", "Stomach problem", "Malaria"],
    context: &[(
        "reference 1",
        ["Malaria", "Stomach problem", "Typhoid", "Malaria"],
    )],
};

pub const APPLICATION3: ApplicationReference = ApplicationReference {
    distances: [
        [0.1930, 0.3979, 0.2707, 0.6404, 0.6942],
        [0.4230, 0.3648, 0.2882, 0.1181, 0.3191],
        [0.3558, 0.4174, 0.0996, 0.4498, 0.5463],
        [0.1658, 0.2727, 0.3270, 0.4664, 0.5125],
    ],
    judgments: ["Stress", "Spinal problem", "Vision problem", "Stress"],
    context: &[
        (
            "reference 1",
            ["Stress", "Spinal problem", "Vision problem", "Stress"],
        ),
        (
            "reference 2",
            ["Stress", "Spinal problem", "Vision problem", "Stress"],
        ),
    ],
};

pub fn application(id: u8) -> Option<&'static ApplicationReference> {
    match id {
        1 => Some(&APPLICATION1),
        2 => Some(&APPLICATION2),
        3 => Some(&APPLICATION3),
        _ => None,
    }
}

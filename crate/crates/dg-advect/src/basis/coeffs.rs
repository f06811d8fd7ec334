// Generated by scripts/generate_tables.py; do not edit by hand.

/// Number of basis functions in the degree-4 hierarchy.
pub const NUM_MODAL: usize = 15;

/// Row i holds the monomial coefficients of the i-th orthonormal
/// basis function; monomials are ordered by the linear index mapping.
pub const MODAL_COEFFS: [[f64; 15]; 15] = [
    [1.4142135623730950, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [-2.0000000000000000, 6.0000000000000000, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [-3.4641016151377546, 3.4641016151377546, 6.9282032302755092, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [2.4494897427831781, -19.595917942265425, 0.0, 24.494897427831781, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [4.2426406871192851, -25.455844122715711, -8.4852813742385703, 21.213203435596426, 42.426406871192851, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [5.4772255750516611, -10.954451150103322, -32.863353450309967, 5.4772255750516611, 32.863353450309967, 32.863353450309967, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [-2.8284271247461901, 42.426406871192851, 0.0, -127.27922061357855, 0.0, 0.0, 98.994949366116653, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [-4.8989794855663562, 63.686733312362631, 9.7979589711327124, -161.66632302368975, -117.57550765359255, 0.0, 102.87856919689348, 205.75713839378696, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [-6.3245553203367587, 56.920997883030828, 37.947331922020552, -94.868329805051380, -303.57865537616442, -37.947331922020552, 44.271887242357311, 265.63132345414386, 265.63132345414386, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [-7.4833147735478828, 22.449944320643648, 89.799777282574593, -22.449944320643648, -179.59955456514919, -224.49944320643648, 7.4833147735478828, 89.799777282574593, 224.49944320643648, 149.66629547095766, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.1622776601683793, -75.894663844041104, 0.0, 398.44698518121580, 0.0, 0.0, -708.35019587771697, 0.0, 0.0, 0.0, 398.44698518121580, 0.0, 0.0, 0.0, 0.0],
    [5.4772255750516611, -120.49896265113654, -10.954451150103322, 575.10868538042442, 230.04347415216977, 0.0, -920.17389660867907, -920.17389660867907, 0.0, 0.0, 460.08694830433954, 920.17389660867907, 0.0, 0.0, 0.0],
    [7.0710678118654752, -127.27922061357855, -42.426406871192851, 487.90367901871779, 721.24891681027847, 42.426406871192851, -622.25396744416182, -2206.1731573020283, -678.82250993908562, 0.0, 254.55844122715711, 1527.3506473629427, 1527.3506473629427, 0.0, 0.0],
    [8.3666002653407555, -100.39920318408907, -100.39920318408907, 250.99800796022266, 1104.3912350249797, 250.99800796022266, -234.26480742954115, -1907.5848604976922, -2509.9800796022266, -167.33200530681511, 75.299402388066799, 903.59282865680159, 2258.9820716420040, 1505.9880477613360, 0.0],
    [9.4868329805051380, -37.947331922020552, -189.73665961010276, 56.920997883030828, 569.20997883030828, 853.81496824546242, -37.947331922020552, -569.20997883030828, -1707.6299364909248, -1328.1566172707193, 9.4868329805051380, 189.73665961010276, 853.81496824546242, 1328.1566172707193, 664.07830863535966],
];

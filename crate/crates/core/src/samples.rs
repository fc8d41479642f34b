//! Small named trees used by the examples and tests.

use crate::tree::RootedTree;

/// Eleven vertices, binary near the root. For `t = 4` the spur at vertex 5 is
/// cleaned away and the four remaining 4-paths all start at the root.
pub const BINARY_ELEVEN: &str = "root 1\n1 2\n1 3\n2 4\n2 5\n4 8\n4 9\n3 6\n3 7\n6 10\n7 11\n";

pub fn binary_eleven() -> RootedTree {
    RootedTree::parse(BINARY_ELEVEN).expect("valid sample")
}

/// 3-partitioned but not fitting: it has non-initial 3-branches on levels 1, 1 and 3.
pub fn deep_branches() -> RootedTree {
    RootedTree::new(
        1,
        &[
            (1, 2),
            (2, 3),
            (2, 4),
            (4, 5),
            (5, 6),
            (5, 7),
            (6, 8),
            (8, 9),
        ],
    )
    .expect("valid sample")
}

/// Three arms below the root. Fitting for `t = 3` with two initial branches on level 0.
pub fn three_arms() -> RootedTree {
    RootedTree::new(
        1,
        &[
            (1, 2),
            (2, 5),
            (5, 8),
            (1, 3),
            (3, 6),
            (1, 4),
            (4, 7),
            (7, 9),
        ],
    )
    .expect("valid sample")
}

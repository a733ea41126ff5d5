//! Size caps shared by the builders and searches.
//!
//! Every cap can be overridden through an environment variable so that the
//! command-line tool and the test suites agree on defaults:
//!
//! | cap              | default | variable                  |
//! |------------------|---------|---------------------------|
//! | vertices         | 2^20    | `ZFGRAPH_VERTEX_CAP`      |
//! | field order      | 16      | `ZFGRAPH_FIELD_CAP`       |
//! | exact search     | 40      | `ZFGRAPH_SEARCH_CAP`      |
//! | F2 matrix order  | 2^13    | `ZFGRAPH_MATRIX_CAP`      |

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest vertex count a builder will enumerate.
    pub vertices: u64,
    /// Largest field order for table arithmetic.
    pub field_order: u64,
    /// Largest graph on which the exact zero forcing search runs.
    pub search_vertices: usize,
    /// Largest order of a dense GF(2) matrix.
    pub matrix: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            vertices: 1 << 20,
            field_order: 16,
            search_vertices: 40,
            matrix: 1 << 13,
        }
    }
}

impl Caps {
    /// Defaults with environment overrides applied.
    pub fn from_env() -> Self {
        fn read<T: std::str::FromStr>(key: &str) -> Option<T> {
            std::env::var(key).ok().and_then(|v| v.trim().parse().ok())
        }
        let d = Caps::default();
        Caps {
            vertices: read("ZFGRAPH_VERTEX_CAP").unwrap_or(d.vertices),
            field_order: read("ZFGRAPH_FIELD_CAP").unwrap_or(d.field_order),
            search_vertices: read("ZFGRAPH_SEARCH_CAP").unwrap_or(d.search_vertices),
            matrix: read("ZFGRAPH_MATRIX_CAP").unwrap_or(d.matrix),
        }
    }
}

//! Scenarios shipped inside the binary, one per demonstration panel, so
//! `simulate -s <name>` works without any files on disk.

/// Every bundled scenario, keyed by name.
pub const BUNDLED: &[(&str, &str)] = &[
    ("empty", include_str!("../scenarios/empty.txt")),
    (
        "fig2_absorb_L_37",
        include_str!("../scenarios/fig2_absorb_L_37.txt"),
    ),
    (
        "fig2_absorb_L_100",
        include_str!("../scenarios/fig2_absorb_L_100.txt"),
    ),
    (
        "fig2_absorb_R_37",
        include_str!("../scenarios/fig2_absorb_R_37.txt"),
    ),
    (
        "fig2_absorb_R_100",
        include_str!("../scenarios/fig2_absorb_R_100.txt"),
    ),
    (
        "fig3_rotate_L",
        include_str!("../scenarios/fig3_rotate_L.txt"),
    ),
    (
        "fig3_rotate_R",
        include_str!("../scenarios/fig3_rotate_R.txt"),
    ),
    (
        "fig4_rotL_absR",
        include_str!("../scenarios/fig4_rotL_absR.txt"),
    ),
    (
        "fig4_rotR_absL",
        include_str!("../scenarios/fig4_rotR_absL.txt"),
    ),
];

/// The eight panel scenarios emitted by the `figures` subcommand
/// (everything except `empty`).
pub const FIGURE_SCENARIOS: &[&str] = &[
    "fig2_absorb_L_37",
    "fig2_absorb_L_100",
    "fig2_absorb_R_37",
    "fig2_absorb_R_100",
    "fig3_rotate_L",
    "fig3_rotate_R",
    "fig4_rotL_absR",
    "fig4_rotR_absL",
];

pub fn bundled_scenario(name: &str) -> Option<&'static str> {
    BUNDLED
        .iter()
        .find(|(key, _)| *key == name)
        .map(|(_, text)| *text)
}

//! A scenario written inline: ALOHA-thinned PPP against CSMA at the same density.

use urbansg::scenario::{run_scenario, ScenarioConfig};

const CONFIG: &str = r#"
[channel]
alpha = 4
mu = 1

[radio]
beta = 10

[grid]
start = 10
stop = 100
step = 10

[[scenario]]
model = "ppp_analytic"
dimension = 3
rho = 7.56e-4
aloha_p = 0.01
label = "aloha-1%"

[[scenario]]
model = "mmp_analytic"
dimension = 3
rho = 7.56e-4
label = "csma"
"#;

fn main() -> urbansg::Result<()> {
    let cfg = ScenarioConfig::from_toml_str(CONFIG)?;
    print!("{}", run_scenario(&cfg)?.csv);
    Ok(())
}

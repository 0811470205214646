//! Simulator configuration: baseline model, per-profile rules and run
//! counts. The default rule magnitudes are simulator presets chosen to
//! reproduce the qualitative bottleneck signatures; they are not
//! measured values.

use super::baseline::{default_baseline, BaselineModel};
use super::rules::{PerturbationMode, PerturbationRule};
use crate::error::{Error, Result};
use crate::telemetry::{
    builtin_profiles, effect_of, Effect, KpiKind, Location, Measurement, ProfileSpec,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub seed: u64,
    pub runs_per_profile: u32,
    pub baseline_runs: u32,
    /// Profile ids to generate, ascending.
    pub profiles: Vec<u8>,
    pub duration_s: f64,
    pub sample_period_s: f64,
    /// Realization probability for possible-effect rules that do not set
    /// their own.
    pub possible_probability: f64,
    pub baseline: BaselineModel,
    pub profile_rules: BTreeMap<u8, Vec<PerturbationRule>>,
}

impl SimConfig {
    pub fn samples_per_run(&self) -> usize {
        (self.duration_s / self.sample_period_s).round() as usize
    }

    pub fn profile_spec(&self, profile_id: u8) -> Result<ProfileSpec> {
        builtin_profiles()
            .into_iter()
            .find(|p| p.id == profile_id)
            .ok_or_else(|| Error::config(format!("unknown profile id {profile_id}")))
    }

    /// Effective realization probability of a rule under a profile.
    pub fn rule_probability(&self, spec: &ProfileSpec, rule: &PerturbationRule) -> f64 {
        if let Some(p) = rule.probability {
            return p;
        }
        let always = spec
            .components
            .iter()
            .any(|c| effect_of(c.btype, rule.target.kind) == Effect::Always);
        if always {
            1.0
        } else {
            self.possible_probability
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.baseline.validate()?;
        if !(self.duration_s > 0.0 && self.sample_period_s > 0.0) {
            return Err(Error::config("duration and sample period must be positive"));
        }
        if self.samples_per_run() == 0 {
            return Err(Error::config("runs must contain at least one sample"));
        }
        if !(0.0..=1.0).contains(&self.possible_probability) {
            return Err(Error::config("possible_probability must be in [0, 1]"));
        }
        if self.baseline_runs == 0 {
            return Err(Error::config("at least one baseline run is required"));
        }
        for &id in &self.profiles {
            let spec = self.profile_spec(id)?;
            spec.validate()?;
            let rules = self
                .profile_rules
                .get(&id)
                .ok_or_else(|| Error::config(format!("no rules for profile {id}")))?;
            // rules may only touch kinds related to a component type
            for rule in rules {
                let legal = spec
                    .components
                    .iter()
                    .any(|c| effect_of(c.btype, rule.target.kind) != Effect::None);
                if !legal {
                    return Err(Error::config(format!(
                        "profile {id}: rule on {} violates the effect matrix",
                        rule.target
                    )));
                }
                if let Some(p) = rule.probability {
                    if !(0.0..=1.0).contains(&p) {
                        return Err(Error::config(format!(
                            "profile {id}: rule probability {p} out of range"
                        )));
                    }
                }
                if let PerturbationMode::Scale { factor } = rule.mode {
                    if factor < 0.0 {
                        return Err(Error::config(format!(
                            "profile {id}: negative scale factor"
                        )));
                    }
                }
            }
            // every always-effect kind of every component needs a rule
            for c in &spec.components {
                for kind in KpiKind::ALL {
                    if effect_of(c.btype, kind) == Effect::Always
                        && !rules.iter().any(|r| r.target.kind == kind)
                    {
                        return Err(Error::config(format!(
                            "profile {id}: no rule covers always-effect kind {kind}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_json_file(path: &Path) -> Result<SimConfig> {
        let text = std::fs::read_to_string(path)?;
        let config: SimConfig = serde_json::from_str(&text)?;
        config.validate()?;
        Ok(config)
    }
}

struct RuleSet(Vec<PerturbationRule>);

impl RuleSet {
    fn new() -> Self {
        RuleSet(Vec::new())
    }

    fn push(&mut self, kind: KpiKind, loc: Location, mode: PerturbationMode) -> &mut Self {
        self.0.push(PerturbationRule::new(Measurement::new(kind, loc), mode));
        self
    }

    fn push_p(
        &mut self,
        kind: KpiKind,
        loc: Location,
        mode: PerturbationMode,
        p: f64,
    ) -> &mut Self {
        self.0
            .push(PerturbationRule::new(Measurement::new(kind, loc), mode).with_probability(p));
        self
    }
}

/// Default simulator configuration covering all twenty profiles.
///
/// Signature design notes:
/// * RAN-side profiles share mild control-loop stress on MCS and radio
///   TX (plus missed scheduling deadlines outside interference), which
///   keeps RAN bottlenecks mutually closer than to the baseline.
/// * Loss at an intermediate hop elevates the hop's own TCP
///   retransmissions (management-plane traffic crosses the lossy
///   interface) and leaves only a weak end-to-end trace at the UE that
///   grows with severity.
/// * Cross-domain spill of CN profiles is confined to the service layer.
pub fn default_config(seed: u64) -> SimConfig {
    use KpiKind::*;
    use Location::*;
    use PerturbationMode::*;

    let shift = |amount: f64| Shift { amount };
    let scale = |factor: f64| Scale { factor };
    let inflate = |factor: f64| VarianceInflate { factor };
    let spikes = |rate: f64, magnitude: f64| SpikeTrain { rate, magnitude };

    let mut rules: BTreeMap<u8, Vec<PerturbationRule>> = BTreeMap::new();

    // interference: moderate / high downlink interference at the radio link
    let mut interference = |id: u8, cqi: f64, rtx: f64, mcs: f64, tx: f64, thr: f64| {
        let mut r = RuleSet::new();
        r.push(Cqi, Controller, shift(cqi))
            .push(Cqi, Controller, inflate(2.5 + 0.4 * (id as f64)))
            .push(Cqi, Controller, spikes(0.12, cqi * 0.5))
            .push(RadioRtx, Controller, scale(rtx))
            .push(RadioRtx, Controller, spikes(0.12, rtx * 3.0))
            .push_p(Mcs, Controller, shift(mcs), 1.0)
            .push_p(Mcs, Controller, inflate(2.0), 1.0)
            .push_p(RadioTx, Controller, shift(tx), 1.0)
            .push_p(RadioTx, Controller, inflate(1.8), 1.0)
            .push_p(Throughput, Ue, scale(thr), 1.0);
        rules.insert(id, r.0);
    };
    interference(1, -2.8, 8.0, -2.2, -140.0, 0.82);
    interference(2, -5.5, 20.0, -6.0, -300.0, 0.45);

    // packet loss at the SPGW (1% / 4% / 6%); hop-local retransmissions
    // scale with the loss fraction, the UE-side trace stays weak
    let mut loss_spgw = |id: u8, hop: f64, hop_spike: f64, ue: f64, ue_spike: f64, thr: f64| {
        let mut r = RuleSet::new();
        r.push(TcpRtx, Spgw, scale(hop))
            .push(TcpRtx, Spgw, spikes(hop_spike, 8.0))
            .push(TcpRtx, Ue, scale(ue))
            .push(TcpRtx, Ue, spikes(ue_spike, 2.5))
            .push_p(Throughput, Ue, scale(thr), 1.0);
        rules.insert(id, r.0);
    };
    loss_spgw(3, 4.5, 0.10, 1.07, 0.03, 0.50);
    loss_spgw(4, 8.0, 0.14, 1.12, 0.055, 0.28);
    loss_spgw(5, 12.0, 0.18, 1.17, 0.08, 0.22);

    // packet loss at the controller: control-plane TCP suffers, the
    // scheduling loop stalls, user TCP times out at the UE
    let mut r6 = RuleSet::new();
    r6.push(TcpRtx, Controller, scale(8.0))
        .push(TcpRtx, Controller, spikes(0.14, 8.0))
        .push(TcpRtx, Ue, scale(1.8))
        .push(TcpRtx, Ue, spikes(0.08, 3.0))
        .push_p(Msd, Enb, scale(5.0), 1.0)
        .push_p(Msd, Enb, spikes(0.10, 4.0), 1.0)
        .push_p(Mcs, Controller, shift(-1.6), 1.0)
        .push_p(Mcs, Controller, inflate(1.7), 1.0)
        .push_p(RadioTx, Controller, shift(-90.0), 1.0)
        .push_p(RadioTx, Controller, inflate(1.5), 1.0)
        .push_p(Throughput, Ue, scale(0.30), 1.0);
    rules.insert(6, r6.0);

    // packet loss at the eNB: visible in the eNB's own counters
    let mut r7 = RuleSet::new();
    r7.push(TcpRtx, Enb, scale(11.0))
        .push(TcpRtx, Enb, spikes(0.15, 9.0))
        .push(TcpRtx, Ue, scale(1.8))
        .push(TcpRtx, Ue, spikes(0.08, 3.0))
        .push_p(Msd, Enb, scale(4.0), 1.0)
        .push_p(Msd, Enb, spikes(0.10, 3.0), 1.0)
        .push_p(Mcs, Controller, shift(-1.5), 1.0)
        .push_p(Mcs, Controller, inflate(1.6), 1.0)
        .push_p(RadioTx, Controller, shift(-85.0), 1.0)
        .push_p(RadioTx, Controller, inflate(1.5), 1.0)
        .push_p(Throughput, Ue, scale(0.33), 1.0)
        .push_p(Rtt, Ue, scale(1.35), 1.0);
    rules.insert(7, r7.0);

    // congestion on the SGi link: SPGW and its host carry the extra load
    let mut r8 = RuleSet::new();
    r8.push(NetTx, Spgw, scale(1.75))
        .push(NetTx, Spgw, inflate(2.2))
        .push(NetTx, Spgw, spikes(0.12, 600.0))
        .push(NetRx, Spgw, scale(1.70))
        .push(NetRx, Spgw, inflate(2.2))
        .push(NetTx, SpgwHost, scale(1.60))
        .push(NetTx, SpgwHost, inflate(2.0))
        .push(NetRx, SpgwHost, scale(1.55))
        .push(NetRx, SpgwHost, inflate(2.0))
        .push(Cpu, Spgw, shift(9.0))
        .push(Cpu, SpgwHost, shift(7.0))
        .push_p(TcpRtx, Spgw, scale(2.2), 0.5)
        .push_p(Throughput, Ue, scale(0.62), 1.0)
        .push_p(Rtt, Ue, scale(1.5), 1.0);
    rules.insert(8, r8.0);

    // congestion between the SPGW's host and the external network
    let mut r9 = RuleSet::new();
    r9.push(NetTx, SpgwHost, scale(1.80))
        .push(NetTx, SpgwHost, inflate(2.2))
        .push(NetTx, SpgwHost, spikes(0.12, 700.0))
        .push(NetRx, SpgwHost, scale(1.75))
        .push(NetRx, SpgwHost, inflate(2.2))
        .push(Cpu, SpgwHost, shift(8.0))
        .push_p(Throughput, Ue, scale(0.80), 1.0)
        .push_p(Rtt, Ue, scale(1.2), 0.5);
    rules.insert(9, r9.0);

    // congestion on the controller-eNB link
    let mut r10 = RuleSet::new();
    r10.push(NetTx, Controller, scale(2.6))
        .push(NetTx, Controller, inflate(2.4))
        .push(NetTx, Controller, spikes(0.12, 150.0))
        .push(NetRx, Controller, scale(2.5))
        .push(NetRx, Controller, inflate(2.4))
        .push(NetTx, Enb, shift(1400.0))
        .push(NetTx, Enb, inflate(1.8))
        .push(NetRx, Enb, shift(1400.0))
        .push(NetRx, Enb, inflate(1.8))
        .push(Cpu, Controller, shift(6.0))
        .push_p(TcpRtx, Controller, scale(2.2), 0.35)
        .push_p(Msd, Enb, scale(6.0), 1.0)
        .push_p(Msd, Enb, spikes(0.10, 5.0), 1.0)
        .push_p(Mcs, Controller, shift(-1.4), 1.0)
        .push_p(Mcs, Controller, inflate(1.6), 1.0)
        .push_p(RadioTx, Controller, shift(-80.0), 1.0)
        .push_p(RadioTx, Controller, inflate(1.4), 1.0)
        .push_p(Throughput, Ue, scale(0.70), 1.0)
        .push_p(Rtt, Ue, scale(1.3), 1.0);
    rules.insert(10, r10.0);

    // computational stress presets (CPU/memory/storage all strained)
    let mut r11 = RuleSet::new();
    r11.push(Cpu, Spgw, shift(55.0))
        .push(Cpu, Spgw, inflate(3.0))
        .push(Cpu, Spgw, spikes(0.10, 8.0))
        .push(Memory, Spgw, shift(34.0))
        .push(Memory, Spgw, inflate(2.0))
        .push(Storage, Spgw, shift(41.0))
        .push(Storage, Spgw, inflate(2.5))
        .push(Storage, Spgw, spikes(0.08, 5.0))
        .push(Cpu, SpgwHost, shift(18.0))
        .push(Cpu, SpgwHost, inflate(1.8))
        .push(Memory, SpgwHost, shift(6.0))
        .push(Memory, SpgwHost, inflate(1.4))
        .push_p(Throughput, Ue, scale(0.74), 1.0)
        .push_p(Rtt, Ue, scale(1.45), 1.0);
    rules.insert(11, r11.0);

    let mut r12 = RuleSet::new();
    r12.push(Cpu, SpgwHost, shift(52.0))
        .push(Cpu, SpgwHost, inflate(3.0))
        .push(Cpu, SpgwHost, spikes(0.10, 8.0))
        .push(Memory, SpgwHost, shift(30.0))
        .push(Memory, SpgwHost, inflate(2.0))
        .push(Storage, SpgwHost, shift(38.0))
        .push(Storage, SpgwHost, inflate(2.5))
        .push(Storage, SpgwHost, spikes(0.08, 5.0))
        .push_p(Throughput, Ue, scale(0.78), 1.0)
        .push_p(Rtt, Ue, scale(1.4), 1.0);
    rules.insert(12, r12.0);

    let mut r13 = RuleSet::new();
    r13.push(Cpu, Controller, shift(54.0))
        .push(Cpu, Controller, inflate(3.0))
        .push(Cpu, Controller, spikes(0.10, 8.0))
        .push(Memory, Controller, shift(32.0))
        .push(Memory, Controller, inflate(2.0))
        .push(Storage, Controller, shift(39.0))
        .push(Storage, Controller, inflate(2.5))
        .push(Storage, Controller, spikes(0.08, 5.0))
        .push_p(RadioRtx, Controller, scale(1.8), 0.4)
        .push_p(Msd, Enb, scale(5.0), 1.0)
        .push_p(Msd, Enb, spikes(0.10, 4.0), 1.0)
        .push_p(Mcs, Controller, shift(-1.5), 1.0)
        .push_p(Mcs, Controller, inflate(1.7), 1.0)
        .push_p(RadioTx, Controller, shift(-90.0), 1.0)
        .push_p(RadioTx, Controller, inflate(1.5), 1.0)
        .push_p(Throughput, Ue, scale(0.72), 1.0)
        .push_p(Rtt, Ue, scale(1.5), 1.0);
    rules.insert(13, r13.0);

    // delay at the SPGW: both SPGW-adjacent links see the added latency
    let mut r14 = RuleSet::new();
    r14.push(LinkDelay, S1u, shift(30.0))
        .push(LinkDelay, S1u, inflate(2.0))
        .push(LinkDelay, S1u, spikes(0.10, 6.0))
        .push(LinkDelay, Sgi, shift(30.0))
        .push(LinkDelay, Sgi, inflate(2.0))
        .push(LinkDelay, Sgi, spikes(0.10, 6.0))
        .push_p(Throughput, Ue, scale(0.66), 1.0)
        .push_p(Rtt, Ue, shift(58.0), 1.0);
    rules.insert(14, r14.0);

    // delay on the fronthaul: the symmetric link probe cannot tell which
    // end added it, so profiles 15 and 16 share one signature
    let fronthaul_delay = |added: f64, msd: f64, msd_spike: f64, mcs: f64, tx: f64,
                           thr: f64, rtt: f64| {
        let mut r = RuleSet::new();
        r.push(LinkDelay, ControllerEnb, shift(added))
            .push(LinkDelay, ControllerEnb, inflate(2.2))
            .push(LinkDelay, ControllerEnb, spikes(0.10, added * 0.28))
            .push_p(Msd, Enb, scale(msd), 1.0)
            .push_p(Msd, Enb, spikes(0.12, msd_spike), 1.0)
            .push_p(Mcs, Controller, shift(mcs), 1.0)
            .push_p(Mcs, Controller, inflate(1.6), 1.0)
            .push_p(RadioTx, Controller, shift(tx), 1.0)
            .push_p(RadioTx, Controller, inflate(1.4), 1.0)
            .push_p(Throughput, Ue, scale(thr), 1.0)
            .push_p(Rtt, Ue, shift(rtt), 0.5);
        r.0
    };
    rules.insert(15, fronthaul_delay(0.9, 7.0, 6.0, -1.3, -75.0, 0.93, 1.8));
    rules.insert(16, fronthaul_delay(0.9, 7.0, 6.0, -1.3, -75.0, 0.93, 1.8));
    rules.insert(17, fronthaul_delay(1.5, 12.0, 9.0, -1.8, -110.0, 0.88, 3.0));

    // composites are the union of their components' rules
    let union = |rules: &BTreeMap<u8, Vec<PerturbationRule>>, a: u8, b: u8| {
        let mut out = rules[&a].clone();
        out.extend(rules[&b].iter().copied());
        out
    };
    rules.insert(18, union(&rules, 8, 10));
    rules.insert(19, union(&rules, 13, 15));
    rules.insert(20, union(&rules, 3, 15));

    SimConfig {
        seed,
        runs_per_profile: 5,
        baseline_runs: 5,
        profiles: (1..=20).collect(),
        duration_s: 120.0,
        sample_period_s: 1.0,
        possible_probability: 0.5,
        baseline: default_baseline(),
        profile_rules: rules,
    }
}

//! Bottleneck types and the injected profile definitions.

use super::kpi::{Domain, Location};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Category of performance degradation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BottleneckType {
    Interference,
    PacketLoss,
    Congestion,
    Resources,
    Delay,
}

impl BottleneckType {
    pub const ALL: [BottleneckType; 5] = [
        BottleneckType::Interference,
        BottleneckType::PacketLoss,
        BottleneckType::Congestion,
        BottleneckType::Resources,
        BottleneckType::Delay,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BottleneckType::Interference => "interference",
            BottleneckType::PacketLoss => "packet_loss",
            BottleneckType::Congestion => "congestion",
            BottleneckType::Resources => "resources",
            BottleneckType::Delay => "delay",
        }
    }
}

impl fmt::Display for BottleneckType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Qualitative severity of a profile component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeverityLevel {
    Low,
    Moderate,
    High,
}

/// One injected bottleneck: a type at a location with a severity.
///
/// `parameter` carries the numeric intensity where one is defined (loss
/// fraction, added delay in ms); congestion and resource-stress profiles
/// are defined qualitatively and take their intensity from simulator
/// presets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileComponent {
    pub btype: BottleneckType,
    pub location: Location,
    pub level: SeverityLevel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter_unit: Option<ParameterUnit>,
}

/// Unit of a profile component's numeric intensity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParameterUnit {
    /// Loss fraction in [0, 1].
    Fraction,
    /// Added delay in milliseconds.
    Ms,
}

impl ProfileComponent {
    pub fn new(
        btype: BottleneckType,
        location: Location,
        level: SeverityLevel,
        parameter: Option<f64>,
        parameter_unit: Option<ParameterUnit>,
    ) -> Self {
        ProfileComponent { btype, location, level, parameter, parameter_unit }
    }

    pub fn domain(&self) -> Domain {
        self.location.analysis_domain()
    }
}

/// A bottleneck profile: one component for the singular profiles (ids
/// 1-17), two for the composite profiles (ids 18-20).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileSpec {
    pub id: u8,
    pub components: Vec<ProfileComponent>,
}

impl ProfileSpec {
    pub fn is_composite(&self) -> bool {
        self.components.len() > 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.id == 0 || self.id > 20 {
            return Err(Error::config(format!("profile id {} out of range 1..=20", self.id)));
        }
        let expected = if self.id <= 17 { 1 } else { 2 };
        if self.components.len() != expected {
            return Err(Error::config(format!(
                "profile {} must have {} component(s), has {}",
                self.id,
                expected,
                self.components.len()
            )));
        }
        for c in &self.components {
            if !valid_locations(c.btype).contains(&c.location) {
                return Err(Error::config(format!(
                    "profile {}: {} is not a valid location for {}",
                    self.id, c.location, c.btype
                )));
            }
        }
        Ok(())
    }
}

/// Locations a bottleneck type may be injected at. Interference maps to
/// the eNB, which owns the radio interface.
pub fn valid_locations(btype: BottleneckType) -> &'static [Location] {
    match btype {
        BottleneckType::Interference => &[Location::Enb],
        BottleneckType::PacketLoss => &[Location::Spgw, Location::Controller, Location::Enb],
        BottleneckType::Congestion => {
            &[Location::Sgi, Location::ControllerEnb, Location::S1u, Location::SpgwHost]
        }
        BottleneckType::Resources => &[
            Location::Hss,
            Location::Mme,
            Location::Spgw,
            Location::SpgwHost,
            Location::Enb,
            Location::Controller,
        ],
        BottleneckType::Delay => &[Location::Spgw, Location::Controller, Location::Enb],
    }
}

pub const BASELINE_PROFILE_ID: u8 = 0;
pub const SINGULAR_PROFILE_IDS: std::ops::RangeInclusive<u8> = 1..=17;
pub const COMPOSITE_PROFILE_IDS: std::ops::RangeInclusive<u8> = 18..=20;

/// The twenty built-in profiles.
pub fn builtin_profiles() -> Vec<ProfileSpec> {
    use BottleneckType::*;
    use Location::*;
    use SeverityLevel::*;

    let one = |id: u8, c: ProfileComponent| ProfileSpec { id, components: vec![c] };
    let comp = ProfileComponent::new;

    let interference_moderate = comp(Interference, Enb, Moderate, None, None);
    let interference_high = comp(Interference, Enb, High, None, None);
    let loss_spgw_low = comp(PacketLoss, Spgw, Low, Some(0.01), Some(ParameterUnit::Fraction));
    let loss_spgw_moderate = comp(PacketLoss, Spgw, Moderate, Some(0.04), Some(ParameterUnit::Fraction));
    let loss_spgw_high = comp(PacketLoss, Spgw, High, Some(0.06), Some(ParameterUnit::Fraction));
    let loss_controller = comp(PacketLoss, Controller, Moderate, Some(0.04), Some(ParameterUnit::Fraction));
    let loss_enb = comp(PacketLoss, Enb, Moderate, Some(0.04), Some(ParameterUnit::Fraction));
    let congestion_sgi = comp(Congestion, Sgi, Moderate, None, None);
    let congestion_host = comp(Congestion, SpgwHost, Moderate, None, None);
    let congestion_fronthaul = comp(Congestion, ControllerEnb, Moderate, None, None);
    let resources_spgw = comp(Resources, Spgw, Moderate, None, None);
    let resources_host = comp(Resources, SpgwHost, Moderate, None, None);
    let resources_controller = comp(Resources, Controller, Moderate, None, None);
    let delay_spgw = comp(Delay, Spgw, Moderate, Some(30.0), Some(ParameterUnit::Ms));
    let delay_controller = comp(Delay, Controller, Moderate, Some(0.9), Some(ParameterUnit::Ms));
    let delay_enb_moderate = comp(Delay, Enb, Moderate, Some(0.9), Some(ParameterUnit::Ms));
    let delay_enb_high = comp(Delay, Enb, High, Some(1.5), Some(ParameterUnit::Ms));

    vec![
        one(1, interference_moderate),
        one(2, interference_high),
        one(3, loss_spgw_low),
        one(4, loss_spgw_moderate),
        one(5, loss_spgw_high),
        one(6, loss_controller),
        one(7, loss_enb),
        one(8, congestion_sgi),
        one(9, congestion_host),
        one(10, congestion_fronthaul),
        one(11, resources_spgw),
        one(12, resources_host),
        one(13, resources_controller),
        one(14, delay_spgw),
        one(15, delay_controller),
        one(16, delay_enb_moderate),
        one(17, delay_enb_high),
        ProfileSpec { id: 18, components: vec![congestion_sgi, congestion_fronthaul] },
        ProfileSpec { id: 19, components: vec![resources_controller, delay_controller] },
        ProfileSpec { id: 20, components: vec![loss_spgw_low, delay_controller] },
    ]
}

/// Look up a built-in profile by id.
pub fn profile_spec(id: u8) -> Option<ProfileSpec> {
    builtin_profiles().into_iter().find(|p| p.id == id)
}

/// Bottleneck type of a singular profile.
pub fn profile_type(id: u8) -> Option<BottleneckType> {
    profile_spec(id).filter(|p| !p.is_composite()).map(|p| p.components[0].btype)
}

/// Analysis domain of a singular profile.
pub fn profile_domain(id: u8) -> Option<Domain> {
    profile_spec(id).filter(|p| !p.is_composite()).map(|p| p.components[0].domain())
}

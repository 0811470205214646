//! Relation between bottleneck types and KPI kinds.
//!
//! `Always` marks measurements that react whenever the bottleneck is
//! present, `Possible` marks measurements that may react depending on the
//! profile, `None` marks measurements with no discernible relation.

use super::kpi::KpiKind;
use super::profile::BottleneckType;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Effect {
    Always,
    Possible,
    None,
}

/// Look up the effect of a bottleneck type on a KPI kind.
pub fn effect_of(btype: BottleneckType, kind: KpiKind) -> Effect {
    use BottleneckType::*;
    use Effect::*;
    use KpiKind::*;
    match kind {
        Throughput | Rtt | RadioTx | Mcs => Possible,
        RadioRtx => match btype {
            Interference => Always,
            Resources | Delay => Possible,
            PacketLoss | Congestion => None,
        },
        Cqi => match btype {
            Interference => Always,
            _ => None,
        },
        Msd => match btype {
            Interference => None,
            _ => Possible,
        },
        TcpRtx => match btype {
            PacketLoss => Always,
            Congestion => Possible,
            _ => None,
        },
        Cpu | Memory | Storage => match btype {
            Resources => Always,
            Congestion => Possible,
            _ => None,
        },
        NetTx | NetRx => match btype {
            Congestion => Always,
            _ => None,
        },
        LinkDelay => match btype {
            Delay => Always,
            _ => None,
        },
    }
}

/// The full (type, kind) effect table as an owned value, for
/// serialization and exports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectMatrix {
    pub entries: BTreeMap<BottleneckType, BTreeMap<KpiKind, Effect>>,
}

impl EffectMatrix {
    pub fn builtin() -> Self {
        let mut entries = BTreeMap::new();
        for btype in BottleneckType::ALL {
            let mut row = BTreeMap::new();
            for kind in KpiKind::ALL {
                row.insert(kind, effect_of(btype, kind));
            }
            entries.insert(btype, row);
        }
        EffectMatrix { entries }
    }

    pub fn get(&self, btype: BottleneckType, kind: KpiKind) -> Effect {
        self.entries[&btype][&kind]
    }
}

impl Default for EffectMatrix {
    fn default() -> Self {
        EffectMatrix::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BottleneckType::*;
    use KpiKind::*;

    #[test]
    fn spot_checks_against_the_table() {
        assert_eq!(effect_of(Interference, Cqi), Effect::Always);
        assert_eq!(effect_of(Delay, LinkDelay), Effect::Always);
        assert_eq!(effect_of(Interference, Cpu), Effect::None);
        assert_eq!(effect_of(PacketLoss, TcpRtx), Effect::Always);
        assert_eq!(effect_of(Congestion, NetTx), Effect::Always);
        assert_eq!(effect_of(Congestion, NetRx), Effect::Always);
        assert_eq!(effect_of(Resources, Cpu), Effect::Always);
        assert_eq!(effect_of(Resources, Memory), Effect::Always);
        assert_eq!(effect_of(Resources, Storage), Effect::Always);
        assert_eq!(effect_of(Interference, RadioRtx), Effect::Always);
    }

    #[test]
    fn cqi_always_for_interference_and_none_elsewhere() {
        for btype in BottleneckType::ALL {
            let expect = if btype == Interference { Effect::Always } else { Effect::None };
            assert_eq!(effect_of(btype, Cqi), expect);
        }
    }

    #[test]
    fn link_delay_always_for_delay_only() {
        for btype in BottleneckType::ALL {
            let expect = if btype == Delay { Effect::Always } else { Effect::None };
            assert_eq!(effect_of(btype, LinkDelay), expect);
        }
    }

    #[test]
    fn tx_rx_always_for_congestion_only() {
        for kind in [NetTx, NetRx] {
            for btype in BottleneckType::ALL {
                let expect = if btype == Congestion { Effect::Always } else { Effect::None };
                assert_eq!(effect_of(btype, kind), expect);
            }
        }
    }

    #[test]
    fn msd_has_no_interference_relation() {
        assert_eq!(effect_of(Interference, Msd), Effect::None);
        assert_eq!(effect_of(Delay, Msd), Effect::Possible);
    }

    #[test]
    fn matrix_round_trips_through_serialization() {
        let matrix = EffectMatrix::builtin();
        let json = serde_json::to_string(&matrix).unwrap();
        let back: EffectMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(matrix, back);
    }
}

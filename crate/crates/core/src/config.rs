//! Radar chirp/frame/array parameters, derived resolutions and bin scales,
//! and the receiver link budget used for maximum-range calibration.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};

/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// FMCW chirp, frame and virtual-array parameters.
///
/// All quantities are stored in SI units. `element_spacing` is expressed in
/// multiples of the carrier wavelength (0.5 for a half-wavelength ULA).
#[derive(Debug, Clone, PartialEq)]
pub struct RadarConfig {
    /// Chirp start frequency (Hz).
    pub start_frequency: f64,
    /// Swept RF bandwidth (Hz).
    pub sweep_bandwidth: f64,
    /// Chirp slope (Hz/s).
    pub sweep_slope: f64,
    /// ADC sampling rate (samples/s).
    pub sampling_frequency: f64,
    /// Fast-time samples per chirp.
    pub samples_per_chirp: usize,
    /// Chirps per frame (slow-time length).
    pub chirps_per_frame: usize,
    /// Chirp repetition period (s).
    pub chirp_duration: f64,
    /// Frame rate (frames/s).
    pub frame_rate: f64,
    /// Transmit antennas.
    pub n_tx: usize,
    /// Receive antennas.
    pub n_rx: usize,
    /// Virtual-element spacing in multiples of the wavelength.
    pub element_spacing: f64,
    pub range_fft_size: usize,
    pub doppler_fft_size: usize,
    pub angle_fft_size: usize,
}

impl Default for RadarConfig {
    /// 77 GHz 2TX×4RX evaluation-board chirp profile used throughout the
    /// tests and shipped in `configs/awr1642.cfg`.
    fn default() -> Self {
        RadarConfig {
            start_frequency: 77e9,
            sweep_bandwidth: 670e6,
            sweep_slope: 21e12,
            sampling_frequency: 4e6,
            samples_per_chirp: 128,
            chirps_per_frame: 255,
            // written as value × unit so it is bit-identical to the parsed form
            chirp_duration: 120.0 * 1e-6,
            frame_rate: 30.0,
            n_tx: 2,
            n_rx: 4,
            element_spacing: 0.5,
            range_fft_size: 128,
            doppler_fft_size: 256,
            angle_fft_size: 128,
        }
    }
}

/// One failed [`RadarConfig`] invariant: the offending field and the rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigViolation {
    pub field: &'static str,
    pub rule: String,
}

impl fmt::Display for ConfigViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.rule)
    }
}

impl RadarConfig {
    /// Carrier wavelength at the start frequency (m).
    pub fn wavelength(&self) -> f64 {
        SPEED_OF_LIGHT / self.start_frequency
    }

    /// Virtual ULA size (n_tx × n_rx).
    pub fn n_virtual(&self) -> usize {
        self.n_tx * self.n_rx
    }

    /// Element spacing in meters.
    pub fn element_spacing_m(&self) -> f64 {
        self.element_spacing * self.wavelength()
    }

    /// Bandwidth actually swept while the ADC samples one chirp.
    pub fn sampled_bandwidth(&self) -> f64 {
        self.sweep_slope * self.samples_per_chirp as f64 / self.sampling_frequency
    }

    /// Range extent of one range-FFT bin: c·fs/(2·S·N_fft) (m).
    pub fn range_bin_spacing(&self) -> f64 {
        SPEED_OF_LIGHT * self.sampling_frequency
            / (2.0 * self.sweep_slope * self.range_fft_size as f64)
    }

    /// Velocity extent of one Doppler-FFT bin: λ/(2·N_fft·T_c) (m/s).
    pub fn doppler_bin_spacing(&self) -> f64 {
        self.wavelength() / (2.0 * self.doppler_fft_size as f64 * self.chirp_duration)
    }

    /// sin(θ) of angle bin `bin` on the shifted, sin-spaced angle grid.
    pub fn angle_bin_sin(&self, bin: usize) -> f64 {
        let n = self.angle_fft_size as f64;
        (bin as f64 - n / 2.0) / (n * self.element_spacing)
    }

    /// Azimuth of angle bin `bin` in degrees.
    pub fn angle_bin_deg(&self, bin: usize) -> f64 {
        self.angle_bin_sin(bin).clamp(-1.0, 1.0).asin().to_degrees()
    }

    /// Largest range whose beat frequency stays below fs/2.
    pub fn max_unambiguous_range(&self) -> f64 {
        SPEED_OF_LIGHT * self.sampling_frequency / (4.0 * self.sweep_slope)
    }

    /// Largest radial speed before the inter-chirp phase wraps: λ/(4·T_c).
    pub fn max_unambiguous_velocity(&self) -> f64 {
        self.wavelength() / (4.0 * self.chirp_duration)
    }

    /// Check every config invariant; empty list means the config is usable.
    pub fn validate(&self) -> Vec<ConfigViolation> {
        let mut v = Vec::new();
        let positive: [(&'static str, f64); 8] = [
            ("start_frequency", self.start_frequency),
            ("sweep_bandwidth", self.sweep_bandwidth),
            ("sweep_slope", self.sweep_slope),
            ("sampling_frequency", self.sampling_frequency),
            ("chirp_duration", self.chirp_duration),
            ("frame_rate", self.frame_rate),
            ("element_spacing", self.element_spacing),
            ("chirp_duration", self.chirp_duration),
        ];
        for (field, val) in positive {
            if !(val > 0.0) {
                v.push(ConfigViolation {
                    field,
                    rule: format!("must be positive, got {val}"),
                });
            }
        }
        for (field, val) in [
            ("samples_per_chirp", self.samples_per_chirp),
            ("chirps_per_frame", self.chirps_per_frame),
            ("n_tx", self.n_tx),
            ("n_rx", self.n_rx),
        ] {
            if val == 0 {
                v.push(ConfigViolation {
                    field,
                    rule: "must be at least 1".into(),
                });
            }
        }
        if self.sweep_bandwidth > 0.0 && self.sampling_frequency > 0.0 {
            let sampled = self.sampled_bandwidth();
            let rel = (sampled - self.sweep_bandwidth).abs() / self.sweep_bandwidth;
            if rel > 0.01 {
                v.push(ConfigViolation {
                    field: "sweep_bandwidth",
                    rule: format!(
                        "sampled bandwidth {:.3e} Hz differs from sweep_bandwidth {:.3e} Hz by {:.1}% (>1%)",
                        sampled,
                        self.sweep_bandwidth,
                        rel * 100.0
                    ),
                });
            }
        }
        if self.sampling_frequency > 0.0 {
            let needed = self.samples_per_chirp as f64 / self.sampling_frequency;
            if self.chirp_duration < needed {
                v.push(ConfigViolation {
                    field: "chirp_duration",
                    rule: format!(
                        "{:.3e} s is shorter than the {:.3e} s needed to sample {} points at {:.3e} sps",
                        self.chirp_duration, needed, self.samples_per_chirp, self.sampling_frequency
                    ),
                });
            }
        }
        for (field, fft, data) in [
            ("range_fft_size", self.range_fft_size, self.samples_per_chirp),
            ("doppler_fft_size", self.doppler_fft_size, self.chirps_per_frame),
            ("angle_fft_size", self.angle_fft_size, self.n_tx * self.n_rx),
        ] {
            if fft < data {
                v.push(ConfigViolation {
                    field,
                    rule: format!("FFT size {fft} is smaller than the data length {data}"),
                });
            }
        }
        v
    }

    /// Parse a `key = value unit` config file (see `configs/awr1642.cfg`).
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_str_contents(&text)
    }

    pub fn from_str_contents(text: &str) -> Result<Self> {
        let mut cfg = RadarConfig::default();
        let mut seen = Vec::new();
        for (line_no, key, value) in parse_lines(text)? {
            seen.push(key.clone());
            let f = |v: f64| v;
            match key.as_str() {
                "start_frequency" => cfg.start_frequency = f(value),
                "sweep_bandwidth" => cfg.sweep_bandwidth = f(value),
                "sweep_slope" => cfg.sweep_slope = f(value),
                "sampling_frequency" => cfg.sampling_frequency = f(value),
                "samples_per_chirp" => cfg.samples_per_chirp = as_count(value, line_no)?,
                "chirps_per_frame" => cfg.chirps_per_frame = as_count(value, line_no)?,
                "chirp_duration" => cfg.chirp_duration = f(value),
                "frame_rate" => cfg.frame_rate = f(value),
                "n_tx" => cfg.n_tx = as_count(value, line_no)?,
                "n_rx" => cfg.n_rx = as_count(value, line_no)?,
                "element_spacing" => cfg.element_spacing = f(value),
                "range_fft_size" => cfg.range_fft_size = as_count(value, line_no)?,
                "doppler_fft_size" => cfg.doppler_fft_size = as_count(value, line_no)?,
                "angle_fft_size" => cfg.angle_fft_size = as_count(value, line_no)?,
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unknown key `{other}`"),
                    })
                }
            }
        }
        if seen.is_empty() {
            return Err(Error::InvalidConfig("config file has no entries".into()));
        }
        Ok(cfg)
    }
}

/// Receiver link-budget parameters. Values are stored in the conventions
/// they are usually quoted in (dBm for TX power, dB for RX gain, noise
/// figure and SNR, linear for TX gain); the computations convert.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkBudget {
    /// Transmit power (dBm).
    pub tx_power: f64,
    /// Transmit antenna gain (linear).
    pub tx_gain: f64,
    /// Receive gain (dB).
    pub rx_gain: f64,
    /// Carrier wavelength (m).
    pub wavelength: f64,
    /// Target radar cross section (m²).
    pub rcs: f64,
    /// Boltzmann constant (J/K).
    pub boltzmann: f64,
    /// Receiver temperature (K).
    pub temperature: f64,
    /// Receiver (IF) bandwidth (Hz).
    pub receiver_bandwidth: f64,
    /// Receiver noise figure (dB).
    pub noise_figure: f64,
    /// Minimum SNR for reliable detection (dB).
    pub min_snr: f64,
}

impl Default for LinkBudget {
    /// Datasheet values for the 77 GHz evaluation board
    /// (`configs/awr1642_linkbudget.cfg`).
    fn default() -> Self {
        LinkBudget {
            tx_power: 12.5,
            tx_gain: 1.0,
            rx_gain: 24.0,
            wavelength: 0.0038961,
            rcs: 1.0,
            boltzmann: 1.38e-23,
            temperature: 290.0,
            receiver_bandwidth: 4e6,
            noise_figure: 15.0,
            min_snr: 2.0,
        }
    }
}

impl LinkBudget {
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_str_contents(&text)
    }

    pub fn from_str_contents(text: &str) -> Result<Self> {
        let mut lb = LinkBudget::default();
        let mut any = false;
        for (line_no, key, value) in parse_lines(text)? {
            any = true;
            match key.as_str() {
                "tx_power" => lb.tx_power = value,
                "tx_gain" => lb.tx_gain = value,
                "rx_gain" => lb.rx_gain = value,
                "wavelength" => lb.wavelength = value,
                "rcs" => lb.rcs = value,
                "boltzmann" => lb.boltzmann = value,
                "temperature" => lb.temperature = value,
                "receiver_bandwidth" => lb.receiver_bandwidth = value,
                "noise_figure" => lb.noise_figure = value,
                "min_snr" => lb.min_snr = value,
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unknown key `{other}`"),
                    })
                }
            }
        }
        if !any {
            return Err(Error::InvalidConfig("link-budget file has no entries".into()));
        }
        lb.validate()?;
        Ok(lb)
    }

    fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("tx_gain", self.tx_gain),
            ("wavelength", self.wavelength),
            ("rcs", self.rcs),
            ("boltzmann", self.boltzmann),
            ("temperature", self.temperature),
            ("receiver_bandwidth", self.receiver_bandwidth),
        ] {
            if !(v > 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "link budget {name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Power-convention dB to linear ratio.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Linear power ratio to dB.
pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

pub fn dbm_to_watts(dbm: f64) -> f64 {
    db_to_linear(dbm) * 1e-3
}

pub fn watts_to_dbm(watts: f64) -> f64 {
    linear_to_db(watts / 1e-3)
}

/// Theoretical range resolution c/(2B) (m).
pub fn range_resolution(cfg: &RadarConfig) -> Result<f64> {
    if !(cfg.sweep_bandwidth > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "sweep_bandwidth must be positive, got {}",
            cfg.sweep_bandwidth
        )));
    }
    Ok(SPEED_OF_LIGHT / (2.0 * cfg.sweep_bandwidth))
}

/// Velocity resolution λ/(2·L·T_c) (m/s).
pub fn velocity_resolution(cfg: &RadarConfig) -> Result<f64> {
    if cfg.chirps_per_frame == 0 || !(cfg.chirp_duration > 0.0) {
        return Err(Error::InvalidConfig(
            "chirps_per_frame and chirp_duration must be positive".into(),
        ));
    }
    Ok(cfg.wavelength() / (2.0 * cfg.chirps_per_frame as f64 * cfg.chirp_duration))
}

/// Angle resolution λ/(N·h·cosθ) at azimuth `azimuth` (radians in, radians out).
pub fn angle_resolution(cfg: &RadarConfig, azimuth: f64) -> Result<f64> {
    if !(cfg.element_spacing > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "element_spacing must be positive, got {}",
            cfg.element_spacing
        )));
    }
    if azimuth.abs() >= std::f64::consts::FRAC_PI_2 {
        return Err(Error::AngleSingularity);
    }
    let n = cfg.n_virtual() as f64;
    Ok(cfg.wavelength() / (n * cfg.element_spacing_m() * azimuth.cos()))
}

/// Beat frequency 2·S·d/c of a target at distance `distance` (Hz).
pub fn beat_frequency(cfg: &RadarConfig, distance: f64) -> Result<f64> {
    if distance < 0.0 {
        return Err(Error::NegativeDistance(distance));
    }
    Ok(2.0 * cfg.sweep_slope * distance / SPEED_OF_LIGHT)
}

/// Minimum detectable receiver power k·T·B·F·SNR_min (W).
pub fn min_detectable_power(lb: &LinkBudget) -> Result<f64> {
    lb.validate()?;
    Ok(lb.boltzmann
        * lb.temperature
        * lb.receiver_bandwidth
        * db_to_linear(lb.noise_figure)
        * db_to_linear(lb.min_snr))
}

/// Minimum detectable receiver power in dBm.
pub fn min_detectable_power_dbm(lb: &LinkBudget) -> Result<f64> {
    Ok(watts_to_dbm(min_detectable_power(lb)?))
}

/// Maximum detection range from the radar range equation:
/// ⁴√(P_t·G_T·G_R·λ²·σ / ((4π)³·P_min)).
pub fn max_range(lb: &LinkBudget) -> Result<f64> {
    let p_min = min_detectable_power(lb)?;
    let numerator = dbm_to_watts(lb.tx_power)
        * lb.tx_gain
        * db_to_linear(lb.rx_gain)
        * lb.wavelength.powi(2)
        * lb.rcs;
    let denominator = (4.0 * std::f64::consts::PI).powi(3) * p_min;
    Ok((numerator / denominator).powf(0.25))
}

fn as_count(value: f64, line: usize) -> Result<usize> {
    if value < 0.0 || value.fract() != 0.0 || value > usize::MAX as f64 {
        return Err(Error::Parse {
            line,
            msg: format!("expected a non-negative integer, got {value}"),
        });
    }
    Ok(value as usize)
}

/// Parse `key = value [unit]` lines, returning (line number, key, SI value).
/// `#` starts a comment; blank lines are skipped.
fn parse_lines(text: &str) -> Result<Vec<(usize, String, f64)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: line_no,
            msg: "expected `key = value [unit]`".into(),
        })?;
        let key = key.trim().to_string();
        let mut parts = rest.split_whitespace();
        let number = parts.next().ok_or_else(|| Error::Parse {
            line: line_no,
            msg: format!("missing value for `{key}`"),
        })?;
        let value: f64 = number.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("`{number}` is not a number"),
        })?;
        let unit = parts.next().unwrap_or("");
        if let Some(extra) = parts.next() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("unexpected trailing token `{extra}`"),
            });
        }
        let scale = unit_scale(unit).ok_or_else(|| Error::Parse {
            line: line_no,
            msg: format!("unknown unit `{unit}`"),
        })?;
        out.push((line_no, key, value * scale));
    }
    Ok(out)
}

/// SI multiplier for a unit suffix. dB/dBm values are kept in dB, matching
/// the [`LinkBudget`] field conventions.
fn unit_scale(unit: &str) -> Option<f64> {
    Some(match unit {
        "" => 1.0,
        "GHz" => 1e9,
        "MHz" => 1e6,
        "kHz" => 1e3,
        "Hz" => 1.0,
        "THz/s" => 1e12,
        "GHz/s" => 1e9,
        "MHz/us" => 1e12,
        "kHz/us" => 1e9,
        "Msps" => 1e6,
        "ksps" => 1e3,
        "sps" => 1.0,
        "s" => 1.0,
        "ms" => 1e-3,
        "us" => 1e-6,
        "ns" => 1e-9,
        "fps" => 1.0,
        "m" => 1.0,
        "mm" => 1e-3,
        "m^2" | "m2" => 1.0,
        "J/K" => 1.0,
        "K" => 1.0,
        // conventional (non-SI) quantities stay as written
        "dB" | "dBm" => 1.0,
        "wavelength" | "wavelengths" | "lambda" => 1.0,
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn default_config_is_valid() {
        assert!(RadarConfig::default().validate().is_empty());
    }

    #[test]
    fn sampled_bandwidth_matches_sweep() {
        let cfg = RadarConfig::default();
        // 21 MHz/us × 128 / 4 Msps = 672 MHz, within 1% of 670 MHz
        assert_relative_eq!(cfg.sampled_bandwidth(), 672e6, max_relative = 1e-12);
    }

    #[test]
    fn short_chirp_is_flagged() {
        let cfg = RadarConfig {
            chirp_duration: 10e-6, // needs 32 us for 128 samples at 4 Msps
            ..RadarConfig::default()
        };
        let violations = cfg.validate();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].field, "chirp_duration");
    }

    #[test]
    fn slope_bandwidth_mismatch_is_flagged() {
        let cfg = RadarConfig {
            sweep_slope: 10e12,
            ..RadarConfig::default()
        };
        let violations = cfg.validate();
        assert!(violations.iter().any(|v| v.field == "sweep_bandwidth"));
    }

    #[test]
    fn range_resolution_values() {
        let cfg = RadarConfig::default();
        assert_relative_eq!(range_resolution(&cfg).unwrap(), 0.2237, max_relative = 1e-3);

        let unit = RadarConfig {
            sweep_bandwidth: SPEED_OF_LIGHT / 2.0,
            ..cfg.clone()
        };
        assert_relative_eq!(range_resolution(&unit).unwrap(), 1.0, max_relative = 1e-12);

        let wide = RadarConfig {
            sweep_bandwidth: 4e9,
            ..cfg
        };
        // c/(2·4 GHz)
        assert_relative_eq!(
            range_resolution(&wide).unwrap(),
            SPEED_OF_LIGHT / 8e9,
            max_relative = 1e-12
        );
        assert_relative_eq!(range_resolution(&wide).unwrap(), 0.0375, max_relative = 1e-2);
    }

    #[test]
    fn range_resolution_rejects_bad_bandwidth() {
        let cfg = RadarConfig {
            sweep_bandwidth: 0.0,
            ..RadarConfig::default()
        };
        assert!(matches!(
            range_resolution(&cfg),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn velocity_resolution_values() {
        let cfg = RadarConfig::default();
        let vres = velocity_resolution(&cfg).unwrap();
        // λ(77 GHz)/(2·255·120 µs); quoted as 0.065 m/s after rounding
        assert_relative_eq!(vres, 0.0637, max_relative = 5e-3);
        assert!((vres - 0.065).abs() / 0.065 < 0.05);

        let unit = RadarConfig {
            chirps_per_frame: 1,
            chirp_duration: cfg.wavelength() / 2.0,
            ..cfg.clone()
        };
        assert_relative_eq!(velocity_resolution(&unit).unwrap(), 1.0, max_relative = 1e-12);

        let doubled = RadarConfig {
            chirps_per_frame: 510,
            ..cfg
        };
        assert_relative_eq!(
            velocity_resolution(&doubled).unwrap(),
            vres / 2.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn angle_resolution_values() {
        let cfg = RadarConfig::default();
        let at10 = angle_resolution(&cfg, 10f64.to_radians()).unwrap();
        assert_relative_eq!(at10, 0.2539, max_relative = 1e-3);
        assert_relative_eq!(at10.to_degrees(), 14.55, max_relative = 1e-3);
        assert!((at10.to_degrees() - 15.0).abs() / 15.0 < 0.05);

        let two_el = RadarConfig {
            n_tx: 1,
            n_rx: 2,
            ..cfg.clone()
        };
        assert_relative_eq!(angle_resolution(&two_el, 0.0).unwrap(), 1.0, max_relative = 1e-12);

        let at60 = angle_resolution(&cfg, 60f64.to_radians()).unwrap();
        let at0 = angle_resolution(&cfg, 0.0).unwrap();
        assert_relative_eq!(at60, 2.0 * at0, max_relative = 1e-12);

        assert!(matches!(
            angle_resolution(&cfg, std::f64::consts::FRAC_PI_2),
            Err(Error::AngleSingularity)
        ));
    }

    #[test]
    fn beat_frequency_values() {
        let cfg = RadarConfig::default();
        assert_relative_eq!(beat_frequency(&cfg, 10.0).unwrap(), 1.4e6, max_relative = 1e-3);
        assert_eq!(beat_frequency(&cfg, 0.0).unwrap(), 0.0);
        assert!(matches!(
            beat_frequency(&cfg, -1.0),
            Err(Error::NegativeDistance(_))
        ));

        // the canonical test target sits ten range bins up
        let fb = beat_frequency(&cfg, 2.232).unwrap();
        let bin = fb * cfg.range_fft_size as f64 / cfg.sampling_frequency;
        assert_eq!(bin.round() as usize, 10);
    }

    #[test]
    fn min_detectable_power_matches_datasheet_budget() {
        let lb = LinkBudget::default();
        let p = min_detectable_power(&lb).unwrap();
        assert_relative_eq!(p, 8.023005235905377e-13, max_relative = 1e-12);
        assert_relative_eq!(
            min_detectable_power_dbm(&lb).unwrap(),
            -90.9566,
            epsilon = 1e-3
        );

        // unit normalization: F = SNR = 0 dB, B = 1 Hz, T = 1/k
        let unit = LinkBudget {
            noise_figure: 0.0,
            min_snr: 0.0,
            receiver_bandwidth: 1.0,
            temperature: 1.0 / lb.boltzmann,
            ..lb.clone()
        };
        assert_relative_eq!(min_detectable_power(&unit).unwrap(), 1.0, max_relative = 1e-12);

        // doubling the receiver bandwidth costs 3.01 dB
        let doubled = LinkBudget {
            receiver_bandwidth: 8e6,
            ..lb.clone()
        };
        let delta = min_detectable_power_dbm(&doubled).unwrap()
            - min_detectable_power_dbm(&lb).unwrap();
        assert_relative_eq!(delta, 10.0 * 2f64.log10(), max_relative = 1e-9);
    }

    #[test]
    fn max_range_against_arithmetic_oracle() {
        let lb = LinkBudget::default();
        // independently computed from the range equation before the build
        assert_relative_eq!(max_range(&lb).unwrap(), 14.365587134659918, max_relative = 1e-9);

        let boosted = LinkBudget {
            tx_power: lb.tx_power + 10.0 * 4f64.log10(),
            ..lb.clone()
        };
        assert_relative_eq!(
            max_range(&boosted).unwrap(),
            max_range(&lb).unwrap() * 2f64.sqrt(),
            max_relative = 1e-9
        );
    }

    #[test]
    fn max_range_ratio_invariance() {
        // scaling P_t and P_min together cancels in the range equation
        let lb = LinkBudget::default();
        let x = 7.3;
        let scaled = LinkBudget {
            tx_power: lb.tx_power + linear_to_db(x),
            receiver_bandwidth: lb.receiver_bandwidth * x,
            ..lb.clone()
        };
        assert_relative_eq!(
            max_range(&scaled).unwrap(),
            max_range(&lb).unwrap(),
            max_relative = 1e-9
        );
    }

    #[test]
    fn resolutions_decrease_in_their_drivers() {
        let base = RadarConfig::default();
        let mut prev_r = f64::INFINITY;
        let mut prev_v = f64::INFINITY;
        for k in 1..=8 {
            let cfg = RadarConfig {
                sweep_bandwidth: 100e6 * k as f64,
                sweep_slope: 100e6 * k as f64 / 32e-6,
                chirps_per_frame: 32 * k,
                ..base.clone()
            };
            let r = range_resolution(&cfg).unwrap();
            let v = velocity_resolution(&cfg).unwrap();
            assert!(r < prev_r);
            assert!(v < prev_v);
            prev_r = r;
            prev_v = v;
        }
        let mut prev_a = f64::INFINITY;
        for n in [2usize, 4, 8, 16] {
            let cfg = RadarConfig {
                n_tx: 1,
                n_rx: n,
                ..base.clone()
            };
            let a = angle_resolution(&cfg, 0.3).unwrap();
            assert!(a < prev_a);
            prev_a = a;
        }
    }

    #[test]
    fn db_roundtrip_is_tight() {
        for v in [1e-9, 3.7e-3, 1.0, 42.0, 8.1e6] {
            assert_relative_eq!(dbm_to_watts(watts_to_dbm(v)), v, max_relative = 1e-12);
            assert_relative_eq!(db_to_linear(linear_to_db(v)), v, max_relative = 1e-12);
        }
    }

    #[test]
    fn bin_scales_match_hand_arithmetic() {
        let cfg = RadarConfig::default();
        // c·fs/(2·S·N_fft)
        assert_relative_eq!(cfg.range_bin_spacing(), 0.22305986458333332, max_relative = 1e-12);
        assert_relative_eq!(
            cfg.doppler_bin_spacing(),
            cfg.wavelength() / (2.0 * 256.0 * 120e-6),
            max_relative = 1e-12
        );
        // sin-spaced angle grid: half-wavelength ULA spans sinθ ∈ [−1, 1)
        assert_relative_eq!(cfg.angle_bin_sin(64), 0.0, epsilon = 1e-15);
        assert_relative_eq!(cfg.angle_bin_sin(0), -1.0, max_relative = 1e-12);
        assert_relative_eq!(cfg.angle_bin_sin(96), 0.5, max_relative = 1e-12);
        assert_relative_eq!(cfg.angle_bin_deg(96), 30.0, max_relative = 1e-12);
    }

    #[test]
    fn config_file_roundtrip() {
        let text = "\
# chirp profile
start_frequency = 77 GHz
sweep_bandwidth = 670 MHz
sweep_slope = 21 MHz/us
sampling_frequency = 4000 ksps
samples_per_chirp = 128
chirps_per_frame = 255
chirp_duration = 120 us
frame_rate = 30 fps
n_tx = 2
n_rx = 4
element_spacing = 0.5 wavelength
range_fft_size = 128
doppler_fft_size = 256
angle_fft_size = 128
";
        let cfg = RadarConfig::from_str_contents(text).unwrap();
        assert_eq!(cfg, RadarConfig::default());
    }

    #[test]
    fn config_file_errors_name_the_line() {
        let err = RadarConfig::from_str_contents("start_frequency = 77 GHz\nbogus = 1\n")
            .unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("bogus"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = RadarConfig::from_str_contents("start_frequency = 77 parsecs\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn linkbudget_file_parses() {
        let text = "\
tx_power = 12.5 dBm
tx_gain = 1
rx_gain = 24 dB
wavelength = 0.0038961 m
rcs = 1 m^2
boltzmann = 1.38e-23 J/K
temperature = 290 K
receiver_bandwidth = 4 MHz
noise_figure = 15 dB
min_snr = 2 dB
";
        let lb = LinkBudget::from_str_contents(text).unwrap();
        assert_eq!(lb, LinkBudget::default());
    }
}

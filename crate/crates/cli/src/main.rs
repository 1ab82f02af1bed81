//! `docscan`: scan, crop and rotate images, or run the scanning service.
//!
//! Exit status: 0 success, 2 usage error, 3 no document found, 4 I/O error.
//! Set `SCAN_LOG=error|info|debug` for diagnostics on stderr.

use std::net::{Ipv4Addr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use docscan_core::codec::{decode_any_image, decode_image, encode_image};
use docscan_core::pipeline::{fcpt_crop_any, render, scan};
use docscan_core::threshold::ThresholdParams;
use docscan_core::{Error, PipelineConfig, Point2F, Rotate, ScanMode};
use docscan_service::{ServiceConfig, DEFAULT_PORT};

const DEFAULT_OUT: &str = "Scanned.jpg";

#[derive(Parser)]
#[command(name = "docscan", version, about = "Scan documents from photos")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detect the document, flatten it and write the enhanced scan.
    Scan {
        input: PathBuf,
        #[arg(long, default_value = "thresh", value_parser = parse_mode)]
        mode: ScanMode,
        /// Output path; the extension picks the format (.png, .jpg, .ppm, .pgm).
        #[arg(long, default_value = DEFAULT_OUT)]
        out: PathBuf,
        /// Adaptive threshold window side (odd, at least 3).
        #[arg(long, default_value_t = ThresholdParams::DEFAULT_BLOCK)]
        block: usize,
        /// Adaptive threshold offset below the local mean.
        #[arg(long, default_value_t = ThresholdParams::DEFAULT_C)]
        c: u8,
        /// Brightness added before denoising.
        #[arg(long, default_value_t = 50)]
        brighten: u8,
    },
    /// Flatten the quad given by four corner points, in any order.
    Crop {
        input: PathBuf,
        /// Four corners as x1,y1:x2,y2:x3,y3:x4,y4.
        #[arg(long, value_parser = parse_points)]
        points: Points,
        #[arg(long, default_value = DEFAULT_OUT)]
        out: PathBuf,
    },
    /// Rotate a quarter turn: right is counter-clockwise, left clockwise.
    Rotate {
        input: PathBuf,
        #[arg(long)]
        dir: Dir,
        #[arg(long, default_value = DEFAULT_OUT)]
        out: PathBuf,
    },
    /// Run the HTTP service on localhost.
    Serve {
        #[arg(long, default_value_t = DEFAULT_PORT)]
        port: u16,
        /// Directory that saved scans are written into.
        #[arg(long, default_value = ".")]
        save_dir: PathBuf,
        /// Built web UI to serve at `/`.
        #[arg(long)]
        static_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Left,
    Right,
}

#[derive(Clone)]
struct Points([Point2F; 4]);

fn parse_mode(s: &str) -> Result<ScanMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_points(s: &str) -> Result<Points, String> {
    let pts = s
        .split(':')
        .map(|pair| {
            let (x, y) = pair
                .split_once(',')
                .ok_or_else(|| format!("expected x,y, got {pair:?}"))?;
            let num = |v: &str| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| format!("not a number: {v:?}"))
            };
            Ok(Point2F::new(num(x)?, num(y)?))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let n = pts.len();
    pts.try_into()
        .map(Points)
        .map_err(|_| format!("expected 4 points, got {n}"))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NoDocument => 3,
        Error::Io { .. } | Error::Decode { .. } | Error::Encode { .. } => 4,
        Error::InvalidArgument(_)
        | Error::AmbiguousCorners(_)
        | Error::Geometry(_)
        | Error::DimensionMismatch { .. } => 2,
    }
}

fn run(cmd: Command) -> Result<(), Error> {
    match cmd {
        Command::Scan {
            input,
            mode,
            out,
            block,
            c,
            brighten,
        } => {
            let cfg = PipelineConfig {
                adaptive: ThresholdParams::new(block, c)?,
                brighten_amount: brighten,
                ..Default::default()
            };
            cfg.validate()?;
            let img = decode_image(&input)?;
            let result = scan(&img, &cfg)?;
            let q = result.detected_quad;
            log::info!(
                "document corners tl {:?} tr {:?} bl {:?} br {:?}",
                q.tl,
                q.tr,
                q.bl,
                q.br
            );
            encode_image(&render(&result, mode), &out)?;
            println!("{}", out.display());
        }
        Command::Crop { input, points, out } => {
            let img = decode_any_image(&input)?;
            encode_image(&fcpt_crop_any(&img, &points.0)?, &out)?;
            println!("{}", out.display());
        }
        Command::Rotate { input, dir, out } => {
            let img = decode_any_image(&input)?;
            let turned = match dir {
                Dir::Right => img.rotate_ccw(),
                Dir::Left => img.rotate_cw(),
            };
            encode_image(&turned, &out)?;
            println!("{}", out.display());
        }
        Command::Serve {
            port,
            save_dir,
            static_dir,
        } => {
            let config = ServiceConfig {
                save_dir,
                static_dir,
                ..Default::default()
            };
            let addr = SocketAddr::from((Ipv4Addr::LOCALHOST, port));
            let io = |source| Error::Io {
                path: PathBuf::from(addr.to_string()),
                source,
            };
            let runtime = tokio::runtime::Runtime::new().map_err(io)?;
            runtime.block_on(async {
                let listener = tokio::net::TcpListener::bind(addr).await.map_err(io)?;
                eprintln!("serving on http://{addr}");
                docscan_service::serve(listener, config).await.map_err(io)
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SCAN_LOG", "error"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("docscan: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

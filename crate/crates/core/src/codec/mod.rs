//! Reading and writing graphs, packings and drawings.

mod export;
mod layout;
mod planar_code;
mod text;

pub use export::{
    export_dot, export_svg, Annotations, ExportError, CLASS_CENTER, CLASS_CHORD, CLASS_HEXAGON, CLASS_PENTAGON,
    CLASS_STAR_EDGE,
};
pub use layout::{default_outer_face, layout_tutte, segments_cross, Layout, LayoutError, LAYOUT_TOLERANCE};
pub use planar_code::{decode_planar_code, encode_many, encode_planar_code, encode_record, DecodeError, EncodeError, HEADER};
pub use text::{
    parse_cycle_factor, parse_star_packing, write_cycle_factor, write_star_packing, TextError, CYCLES_HEADER,
    PACKING_HEADER,
};

use acc_kit::imaging::{
    apply_effect, blit, decode_ppm, encode_ppm, read_ppm, render_frame, write_ppm, Color, EffectSpec, EffectTable,
    FrameDigest, PixelBuffer, SpriteRegistry,
};
use acc_kit::simkernel::{EffectId, RenderCommand, SpriteId};
use proptest::prelude::*;

fn color() -> impl Strategy<Value = Color> {
    (any::<u8>(), any::<u8>(), any::<u8>()).prop_map(|(r, g, b)| Color::rgb(r, g, b))
}

fn image() -> impl Strategy<Value = PixelBuffer> {
    (1u32..12, 1u32..12).prop_flat_map(|(w, h)| {
        prop::collection::vec(color(), (w * h) as usize)
            .prop_map(move |px| PixelBuffer::from_pixels(w, h, px).unwrap())
    })
}

fn effect() -> impl Strategy<Value = EffectSpec> {
    prop_oneof![
        Just(EffectSpec::None),
        Just(EffectSpec::Gray),
        Just(EffectSpec::Blur),
        any::<u8>().prop_map(EffectSpec::BrightUp),
        any::<u8>().prop_map(EffectSpec::BrightDown),
        color().prop_map(EffectSpec::Fill),
    ]
}

proptest! {
    #[test]
    fn ppm_round_trips(img in image()) {
        let bytes = encode_ppm(&img);
        let back = decode_ppm(&bytes).unwrap();
        prop_assert_eq!(back.pixels(), img.pixels());
    }

    #[test]
    fn effect_text_round_trips(e in effect()) {
        prop_assert_eq!(e.to_string().parse::<EffectSpec>().unwrap(), e);
    }

    #[test]
    fn gray_is_channel_mean(c in color()) {
        let mut img = PixelBuffer::new(1, 1, c);
        apply_effect(&mut img, EffectSpec::Gray);
        let m = ((c.r as u32 + c.g as u32 + c.b as u32) / 3) as u8;
        prop_assert!(img.get(0, 0).same_rgb(&Color::rgb(m, m, m)));
    }

    #[test]
    fn brightness_saturates(c in color(), d in any::<u8>()) {
        let mut up = PixelBuffer::new(1, 1, c);
        apply_effect(&mut up, EffectSpec::BrightUp(d));
        let u = up.get(0, 0);
        prop_assert_eq!((u.r, u.g, u.b), (c.r.saturating_add(d), c.g.saturating_add(d), c.b.saturating_add(d)));
        let mut down = PixelBuffer::new(1, 1, c);
        apply_effect(&mut down, EffectSpec::BrightDown(d));
        let v = down.get(0, 0);
        prop_assert_eq!((v.r, v.g, v.b), (c.r.saturating_sub(d), c.g.saturating_sub(d), c.b.saturating_sub(d)));
    }

    #[test]
    fn blur_matches_neighbour_mean(img in image()) {
        let mut out = img.clone();
        apply_effect(&mut out, EffectSpec::Blur);
        let w = img.width();
        for y in 0..img.height() {
            for x in 0..w {
                let got = out.get(x, y);
                if w < 3 || x == 0 || x + 1 == w {
                    prop_assert_eq!(got, img.get(x, y));
                } else {
                    let (l, c, r) = (img.get(x - 1, y), img.get(x, y), img.get(x + 1, y));
                    let mean = |a: u8, b: u8, d: u8| ((a as u32 + b as u32 + d as u32) / 3) as u8;
                    prop_assert_eq!((got.r, got.g, got.b), (mean(l.r, c.r, r.r), mean(l.g, c.g, r.g), mean(l.b, c.b, r.b)));
                }
            }
        }
    }

    #[test]
    fn masked_pixels_untouched(img in image(), e in effect(), mask in color()) {
        prop_assume!(!matches!(e, EffectSpec::Fill(_)));
        let before = img.clone();
        let mut img = img.with_mask(mask);
        apply_effect(&mut img, e);
        for (a, b) in before.pixels().iter().zip(img.pixels()) {
            if a.same_rgb(&mask) {
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn blit_clips_and_respects_mask(dst in image(), src in image(), x in -15i32..15, y in -15i32..15) {
        let mask = src.get(0, 0);
        let src = src.with_mask(mask);
        let mut out = dst.clone();
        blit(&mut out, &src, x, y, true);
        for dy in 0..dst.height() {
            for dx in 0..dst.width() {
                let (sx, sy) = (dx as i32 - x, dy as i32 - y);
                let inside = sx >= 0 && sy >= 0 && (sx as u32) < src.width() && (sy as u32) < src.height();
                let want = if inside && !src.get(sx as u32, sy as u32).same_rgb(&mask) {
                    src.get(sx as u32, sy as u32)
                } else {
                    dst.get(dx, dy)
                };
                prop_assert!(out.get(dx, dy).same_rgb(&want));
            }
        }
    }

    #[test]
    fn digest_is_order_sensitive(a in image(), b in image()) {
        prop_assume!(a != b);
        let mut ab = FrameDigest::new();
        ab.add(&a);
        ab.add(&b);
        let mut again = FrameDigest::new();
        again.add(&a);
        again.add(&b);
        prop_assert_eq!(ab.finish(), again.finish());
        let mut ba = FrameDigest::new();
        ba.add(&b);
        ba.add(&a);
        prop_assert_ne!(ab.finish(), ba.finish());
    }
}

#[test]
fn one_pixel_ppm_layout() {
    let bytes = encode_ppm(&PixelBuffer::new(1, 1, Color::rgb(1, 2, 3)));
    assert_eq!(bytes, b"P6\n1 1\n255\n\x01\x02\x03");
}

#[test]
fn decode_rejects_garbage() {
    assert!(decode_ppm(b"P3\n1 1\n255\n1 2 3").is_err());
    assert!(decode_ppm(b"P6\n2 2\n255\n\x00\x00\x00").is_err());
    assert!(decode_ppm(b"P6\n1 1\n65535\n\x00\x00\x00\x00\x00\x00").is_err());
}

#[test]
fn file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.ppm");
    let img = PixelBuffer::new(3, 2, Color::rgb(9, 8, 7));
    write_ppm(&path, &img).unwrap();
    assert_eq!(read_ppm(&path).unwrap().pixels(), img.pixels());
    assert!(read_ppm(&dir.path().join("missing.ppm")).is_err());
}

#[test]
fn render_applies_per_command_effect() {
    let mut reg = SpriteRegistry::new();
    reg.insert(SpriteId::ENEMY, PixelBuffer::new(2, 1, Color::rgb(30, 60, 90)));
    let mut effects = EffectTable::new();
    effects.insert(EffectId::GRAY, EffectSpec::Gray);
    let bg = PixelBuffer::new(4, 1, Color::BLACK);
    let cmd = |x, effect| RenderCommand { shape_id: SpriteId::ENEMY, screen_x: x, screen_y: 0, effect };
    let out = render_frame(&[cmd(0, EffectId::NONE), cmd(2, EffectId::GRAY)], &reg, &bg, &effects).unwrap();
    let reds: Vec<u8> = out.pixels().iter().map(|c| c.r).collect();
    assert_eq!(reds, vec![30, 30, 60, 60]);
    assert!(render_frame(&[cmd(0, EffectId::BLUR)], &reg, &bg, &effects).is_err());
    let missing = RenderCommand { shape_id: SpriteId::PRIZE, ..cmd(0, EffectId::NONE) };
    assert!(render_frame(&[missing], &reg, &bg, &effects).is_err());
}

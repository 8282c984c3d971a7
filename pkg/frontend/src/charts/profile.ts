import { fmt, full, quadrantName } from "../format.js";
import type { ProfileDetail, SongSignature } from "../types.js";
import { h, type VNode } from "../vdom.js";

export const BAR_WIDTH = 320;
export const BAR_HEIGHT = 22;
export const ZERO_X = BAR_WIDTH / 2;
const BAR_SPAN = 140; // px for a deviation of DEV_DOMAIN
const DEV_DOMAIN = 0.5;

const FEATURES = ["valence", "energy", "danceability", "acousticness", "liveness"];

function badge(profile: ProfileDetail): VNode {
  if (profile.alignment === null) {
    return h("div", { class: "alignment-badge unclassified" }, [
      h("span", { class: "badge-quadrant" }, ["Unclassified"]),
      h("span", { class: "badge-reason" }, [profile.degenerate_reason ?? "degenerate"]),
    ]);
  }
  const a = profile.alignment;
  return h("div", { class: "alignment-badge" }, [
    h("span", { class: "badge-quadrant", "data-quadrant": a.quadrant }, [
      quadrantName(a.quadrant),
    ]),
    h("span", { class: "badge-metric shape", title: full(a.shape_similarity) }, [
      `shape ${fmt(a.shape_similarity)}`,
    ]),
    h("span", { class: "badge-metric contrast", title: full(a.contrast_ratio) }, [
      `contrast ${fmt(a.contrast_ratio)}`,
    ]),
  ]);
}

/** Diverging horizontal bars, one per feature: positive deviations extend
 * right of the centered zero line, negative left, zero stays zero-length. */
export function deviationBars(deviation: number[], series: string): VNode {
  const children: Array<VNode | string> = [];
  const height = FEATURES.length * (BAR_HEIGHT + 8) + 8;
  children.push(
    h("line", {
      class: "zero-line",
      x1: ZERO_X, x2: ZERO_X, y1: 0, y2: height,
    }),
  );
  deviation.forEach((value, i) => {
    const yTop = 8 + i * (BAR_HEIGHT + 8);
    const width = (Math.min(Math.abs(value), DEV_DOMAIN) / DEV_DOMAIN) * BAR_SPAN;
    children.push(
      h(
        "rect",
        {
          class: `dev-bar ${value >= 0 ? "positive" : "negative"}`,
          "data-feature": FEATURES[i],
          "data-series": series,
          "data-value": full(value),
          x: value >= 0 ? ZERO_X : ZERO_X - width,
          y: yTop,
          width,
          height: BAR_HEIGHT - 8,
        },
        [h("title", {}, [`${FEATURES[i]}: ${fmt(value)} (${full(value)})`])],
      ),
    );
    children.push(
      h(
        "text",
        { class: "dev-label", x: 4, y: yTop + 10, "data-feature": FEATURES[i] },
        [`${FEATURES[i]} ${value >= 0 ? "+" : ""}${fmt(value)}`],
      ),
    );
  });
  return h(
    "svg",
    { class: `deviation-chart ${series}`, viewBox: `0 0 ${BAR_WIDTH} ${height}` },
    children,
  );
}

export const RADAR_SIZE = 260;
const RADAR_R = 100;

function radarPoints(values: number[]): string {
  const cx = RADAR_SIZE / 2;
  const cy = RADAR_SIZE / 2;
  return values
    .map((v, i) => {
      const angle = -Math.PI / 2 + (i * 2 * Math.PI) / values.length;
      const r = Math.max(0, Math.min(1, v)) * RADAR_R;
      return `${cx + r * Math.cos(angle)},${cy + r * Math.sin(angle)}`;
    })
    .join(" ");
}

/** Radar overlay of the era centroid, artist mean, and song features, all
 * five axes in the fixed system-wide feature order. */
export function renderRadar(signature: SongSignature): VNode {
  const children: Array<VNode | string> = [];
  const cx = RADAR_SIZE / 2;
  const cy = RADAR_SIZE / 2;
  signature.radar.feature_order.forEach((feature, i) => {
    const angle = -Math.PI / 2 + (i * 2 * Math.PI) / signature.radar.feature_order.length;
    children.push(
      h("line", {
        class: "radar-axis",
        "data-feature": feature,
        x1: cx, y1: cy,
        x2: cx + RADAR_R * Math.cos(angle),
        y2: cy + RADAR_R * Math.sin(angle),
      }),
    );
    children.push(
      h(
        "text",
        {
          class: "radar-axis-label",
          x: cx + (RADAR_R + 14) * Math.cos(angle),
          y: cy + (RADAR_R + 14) * Math.sin(angle),
          "text-anchor": "middle",
        },
        [feature],
      ),
    );
  });
  const series: Array<[string, number[]]> = [
    ["era", signature.radar.era],
    ["artist", signature.radar.artist],
    ["song", signature.radar.song],
  ];
  for (const [name, values] of series) {
    children.push(
      h("polygon", {
        class: `radar-series ${name}`,
        "data-series": name,
        points: radarPoints(values),
      }),
    );
  }
  return h("svg", {
    class: "radar-chart",
    viewBox: `0 0 ${RADAR_SIZE} ${RADAR_SIZE}`,
  }, children);
}

/** Audio features panel: alignment badge, artist-era deviation bars, and,
 * once a song is selected, its signature (song deviation bars + radar). */
export function renderAudioProfile(
  profile: ProfileDetail,
  signature: SongSignature | null,
): VNode {
  const children: Array<VNode | string> = [badge(profile)];
  if (profile.deviation !== null) {
    children.push(h("h3", {}, ["Artist vs era"]));
    children.push(deviationBars(profile.deviation, "artist"));
  } else {
    children.push(
      h("div", { class: "empty-state" }, ["No audio features for this profile."]),
    );
  }
  if (signature !== null) {
    children.push(h("h3", { class: "song-signature-title" }, [signature.title]));
    children.push(deviationBars(signature.deviation, "song"));
    children.push(renderRadar(signature));
  }
  return h("div", { class: "audio-profile" }, children);
}

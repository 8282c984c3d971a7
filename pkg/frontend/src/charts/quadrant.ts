import { fmt, full, quadrantName } from "../format.js";
import { linear } from "../scales.js";
import type { Selection } from "../state.js";
import type { Trajectory } from "../types.js";
import { h, type VNode } from "../vdom.js";

export const WIDTH = 560;
export const HEIGHT = 440;
export const PADDING = 48;

export interface QuadrantHandlers {
  onPoint(artist: string, decade: string): void;
}

/** Quadrant trajectory map: (shape similarity, contrast ratio) scatter with
 * the median boundary on shape and the fixed 1.0 boundary on contrast.
 * Degenerate profiles have no position; they go to an unclassified tray. */
export function renderQuadrantMap(
  trajectories: Trajectory[],
  medianShape: number | null,
  selection: Selection,
  handlers: QuadrantHandlers,
): VNode {
  const points = trajectories.flatMap((t) =>
    t.points.map((p) => ({ trajectory: t, point: p })),
  );
  const contrasts = points.map((p) => p.point.contrast_ratio);
  const shapes = points.map((p) => p.point.shape_similarity);
  const xMax = 1.0;
  const xMin = Math.min(0, ...shapes) - 0.05;
  const yMax = Math.max(1.25, ...contrasts) + 0.1;
  const x = linear([xMin, xMax], [PADDING, WIDTH - PADDING]);
  const y = linear([0, yMax], [HEIGHT - PADDING, PADDING]);

  const children: Array<VNode | string> = [];

  children.push(
    h("line", {
      class: "boundary contrast-boundary",
      x1: PADDING, x2: WIDTH - PADDING, y1: y(1.0), y2: y(1.0),
      "data-contrast": 1,
    }),
  );
  if (medianShape !== null) {
    children.push(
      h("line", {
        class: "boundary median-boundary",
        x1: x(medianShape), x2: x(medianShape), y1: PADDING, y2: HEIGHT - PADDING,
        "data-median": full(medianShape),
      }),
    );
    const labels: Array<[string, boolean, boolean]> = [
      ["amplified_conformist", true, true],
      ["smoothed_conformist", true, false],
      ["polarized_maverick", false, true],
      ["muted_maverick", false, false],
    ];
    for (const [code, highShape, highContrast] of labels) {
      children.push(
        h(
          "text",
          {
            class: "quadrant-label",
            "data-quadrant": code,
            x: highShape ? WIDTH - PADDING - 4 : PADDING + 4,
            y: highContrast ? PADDING + 14 : HEIGHT - PADDING - 6,
            "text-anchor": highShape ? "end" : "start",
          },
          [quadrantName(code)],
        ),
      );
    }
  }

  for (const t of trajectories) {
    if (t.points.length > 1) {
      const pts = t.points
        .map((p) => `${x(p.shape_similarity)},${y(p.contrast_ratio)}`)
        .join(" ");
      children.push(
        h("polyline", {
          class: `trajectory${selection.artist === t.artist_norm ? " selected" : ""}`,
          "data-artist": t.artist_norm,
          points: pts,
          fill: "none",
        }),
      );
    }
  }

  for (const { trajectory, point } of points) {
    const selected =
      selection.artist === trajectory.artist_norm && selection.decade === point.decade;
    children.push(
      h(
        "circle",
        {
          class: `quadrant-point${selected ? " selected" : ""}`,
          cx: x(point.shape_similarity),
          cy: y(point.contrast_ratio),
          r: selected ? 7 : 5,
          "data-artist": trajectory.artist_norm,
          "data-decade": point.decade,
          "data-shape": full(point.shape_similarity),
          "data-contrast": full(point.contrast_ratio),
        },
        [
          h("title", {}, [
            `${trajectory.artist} · ${point.decade}: shape ${fmt(point.shape_similarity)} ` +
              `(${full(point.shape_similarity)}), contrast ${fmt(point.contrast_ratio)} ` +
              `(${full(point.contrast_ratio)})`,
          ]),
        ],
        { click: () => handlers.onPoint(trajectory.artist_norm, point.decade) },
      ),
    );
  }

  const tray = trajectories.flatMap((t) =>
    t.decades
      .filter((d) => d.degenerate)
      .map((d) =>
        h(
          "li",
          { class: "unclassified-entry", "data-artist": t.artist_norm, "data-decade": d.decade },
          [`${t.artist} · ${d.decade} (${d.degenerate_reason ?? "degenerate"})`],
        ),
      ),
  );

  return h("div", { class: "quadrant-map" }, [
    h("svg", { viewBox: `0 0 ${WIDTH} ${HEIGHT}` }, children),
    tray.length
      ? h("div", { class: "unclassified-tray" }, [
          h("h3", {}, ["Unclassified"]),
          h("ul", {}, tray),
        ])
      : h("div", { class: "unclassified-tray empty" }, []),
  ]);
}

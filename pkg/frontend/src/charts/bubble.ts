import { fmt, full } from "../format.js";
import { DECADES, bubbleRadius, decadeX } from "../scales.js";
import type { Selection } from "../state.js";
import type { RankedArtist, Trajectory } from "../types.js";
import { h, type VNode } from "../vdom.js";

export const WIDTH = 760;
export const ROW_HEIGHT = 64;
export const PADDING = 70;
export const MAX_RADIUS = 22;

export interface BubbleHandlers {
  onBubble(artist: string, decade: string): void;
}

/** Artist-decade bubble chart: x decade, y artist rank, size total chart
 * appearances, color intensity the decade performance score. Lines connect
 * an artist's consecutive decades. */
export function renderBubbleChart(
  artists: RankedArtist[],
  trajectories: Map<string, Trajectory>,
  selection: Selection,
  handlers: BubbleHandlers,
): VNode {
  const height = PADDING + artists.length * ROW_HEIGHT;
  const allBubbles = artists.flatMap(
    (a) => trajectories.get(a.name_norm)?.decades ?? [],
  );
  const maxAppearances = Math.max(1, ...allBubbles.map((d) => d.appearances));
  const maxScore = Math.max(1e-12, ...allBubbles.map((d) => d.performance_score));

  const children: Array<VNode | string> = [];

  for (const decade of DECADES) {
    const x = decadeX(decade, WIDTH, PADDING);
    children.push(
      h("text", { class: "axis-label", x, y: 24, "text-anchor": "middle" }, [decade]),
    );
    children.push(
      h("line", {
        class: "axis-grid",
        x1: x, y1: 40, x2: x, y2: height - 20,
      }),
    );
  }

  artists.forEach((artist, row) => {
    const y = PADDING + row * ROW_HEIGHT;
    const trajectory = trajectories.get(artist.name_norm);
    const bubbles = trajectory?.decades ?? [];
    children.push(
      h(
        "text",
        {
          class: "artist-label",
          x: 8,
          y: y + 4,
          "data-artist": artist.name_norm,
          title: `score ${full(artist.score)}`,
        },
        [`${row + 1}. ${artist.name}`],
      ),
    );
    if (bubbles.length > 1) {
      const pts = bubbles
        .map((d) => `${decadeX(d.decade, WIDTH, PADDING)},${y}`)
        .join(" ");
      children.push(
        h("polyline", {
          class: "career-path",
          "data-artist": artist.name_norm,
          points: pts,
          fill: "none",
        }),
      );
    }
    for (const bubble of bubbles) {
      const selected =
        selection.artist === artist.name_norm && selection.decade === bubble.decade;
      children.push(
        h(
          "circle",
          {
            class: `bubble${selected ? " selected" : ""}${bubble.degenerate ? " degenerate" : ""}`,
            cx: decadeX(bubble.decade, WIDTH, PADDING),
            cy: y,
            r: bubbleRadius(bubble.appearances, maxAppearances, MAX_RADIUS),
            "fill-opacity": 0.25 + 0.75 * (bubble.performance_score / maxScore),
            "data-artist": artist.name_norm,
            "data-decade": bubble.decade,
            "data-appearances": bubble.appearances,
            "data-score": full(bubble.performance_score),
          },
          [
            h("title", {}, [
              `${artist.name} · ${bubble.decade}: ${bubble.appearances} appearances, ` +
                `${bubble.distinct_songs} songs, score ${fmt(bubble.performance_score)} ` +
                `(${full(bubble.performance_score)})`,
            ]),
          ],
          { click: () => handlers.onBubble(artist.name_norm, bubble.decade) },
        ),
      );
    }
  });

  return h("svg", { class: "bubble-chart", viewBox: `0 0 ${WIDTH} ${height}` }, children);
}

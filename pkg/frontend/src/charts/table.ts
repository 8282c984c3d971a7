import { fmt, full } from "../format.js";
import type { Selection } from "../state.js";
import type { ProfileDetail } from "../types.js";
import { h, type VNode } from "../vdom.js";

export interface TableHandlers {
  onSong(title: string): void;
}

/** Song performance table: rows arrive already ordered by the service
 * (avg rank ascending, ties by weeks descending then title). */
export function renderSongTable(
  profile: ProfileDetail,
  selection: Selection,
  handlers: TableHandlers,
): VNode {
  if (profile.songs.length === 0) {
    return h("div", { class: "song-table empty-state" }, [
      "No songs charted for this artist-decade.",
    ]);
  }
  const header = h("tr", {}, [
    h("th", {}, ["song"]),
    h("th", { class: "num" }, ["avg rank"]),
    h("th", { class: "num" }, ["peak"]),
    h("th", { class: "num" }, ["weeks"]),
  ]);
  const rows = profile.songs.map((song) =>
    h(
      "tr",
      {
        class: `song-row${selection.song === song.title_norm ? " selected" : ""}${song.has_features ? "" : " no-features"}`,
        "data-title": song.title_norm,
        "data-avg-rank": full(song.avg_rank),
      },
      [
        h("td", { title: song.title }, [song.title]),
        h("td", { class: "num", title: full(song.avg_rank) }, [fmt(song.avg_rank)]),
        h("td", { class: "num" }, [String(song.peak_rank)]),
        h("td", { class: "num" }, [String(song.weeks)]),
      ],
      { click: () => handlers.onSong(song.title_norm) },
    ),
  );
  return h("div", { class: "song-table" }, [
    h("h3", {}, [`${profile.artist} · ${profile.decade}`]),
    h("table", {}, [h("thead", {}, [header]), h("tbody", {}, rows)]),
  ]);
}

import { ApiClient } from "./api.js";
import { ExplorerApp } from "./app.js";
import { fmt, full } from "./format.js";
import { replaceChildren, h } from "./vdom.js";

const client = new ApiClient((url) => fetch(url));

function container(id: string): Element {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`missing container #${id}`);
  return el;
}

const app = new ExplorerApp(client, () => {
  replaceChildren(container("view-bubble"), app.views.bubble, document);
  replaceChildren(container("view-quadrant"), app.views.quadrant, document);
  replaceChildren(container("view-table"), app.views.table, document);
  replaceChildren(container("view-profile"), app.views.profile, document);
  const s = app.summary;
  if (s !== null) {
    const corr = s.correlation
      ? `r=${fmt(s.correlation.r)}, p=${fmt(s.correlation.p_two_sided)}, n=${s.correlation.n}`
      : "correlation skipped";
    replaceChildren(
      container("summary-line"),
      h("span", { title: s.median_shape === null ? "" : full(s.median_shape) }, [
        `${s.window.start} – ${s.window.end} · ${s.artist_count} artists · ` +
          `${s.profile_count} profiles · median shape ` +
          `${s.median_shape === null ? "n/a" : fmt(s.median_shape)} · ${corr}`,
      ]),
      document,
    );
  }
});

void app.start();

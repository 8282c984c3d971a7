import { ApiClient } from "./api.js";
import { renderBubbleChart } from "./charts/bubble.js";
import { renderAudioProfile } from "./charts/profile.js";
import { renderQuadrantMap } from "./charts/quadrant.js";
import { renderSongTable } from "./charts/table.js";
import { SelectionStore, type Selection } from "./state.js";
import type {
  ProfileDetail,
  RankedArtist,
  SongSignature,
  Summary,
  Trajectory,
} from "./types.js";
import { h, type VNode } from "./vdom.js";

export interface Views {
  bubble: VNode;
  quadrant: VNode;
  table: VNode;
  profile: VNode;
}

function banner(message: string): VNode {
  return h("div", { class: "error-banner", role: "alert" }, [message]);
}

function placeholder(message: string): VNode {
  return h("div", { class: "empty-state" }, [message]);
}

/** Coordinates the four views against the API and the selection store.
 *
 * All rendering is pure (data -> VNode); the browser entry point only
 * mounts `views` after each onRender callback, so tests can drive the
 * whole app headlessly through the same code paths. Responses arriving
 * for a selection that is no longer current are discarded. */
export class ExplorerApp {
  readonly store = new SelectionStore();
  views: Views;

  summary: Summary | null = null;
  artists: RankedArtist[] = [];
  trajectories = new Map<string, Trajectory>();
  profileDetail: ProfileDetail | null = null;
  signature: SongSignature | null = null;

  private renderedVersion = 0;
  private pending: Promise<void> = Promise.resolve();

  constructor(
    private readonly client: ApiClient,
    private readonly onRender: () => void = () => {},
  ) {
    this.views = {
      bubble: placeholder("Loading…"),
      quadrant: placeholder("Loading…"),
      table: placeholder("Select a bubble to list songs."),
      profile: placeholder("Select a bubble to see the audio profile."),
    };
    this.store.subscribe((selection, version) => {
      this.pending = this.onSelectionChange(selection, version);
    });
  }

  /** Resolves once the most recent selection change has been processed. */
  settle(): Promise<void> {
    return this.pending;
  }

  async start(): Promise<void> {
    try {
      const summary = await this.client.summary();
      const artists = await this.client.artists();
      const trajectories = await Promise.all(
        artists.map((a) => this.client.trajectory(a.name_norm)),
      );
      this.summary = summary;
      this.artists = artists;
      this.trajectories = new Map(trajectories.map((t) => [t.artist_norm, t]));
    } catch (exc) {
      const message = `Could not load the analysis bundle: ${String(exc)}`;
      this.views = {
        bubble: banner(message),
        quadrant: banner(message),
        table: banner(message),
        profile: banner(message),
      };
      this.onRender();
      return;
    }
    this.refresh();
  }

  handleBubbleClick = (artist: string, decade: string): void => {
    this.store.selectBubble(artist, decade);
  };

  handleSongClick = (title: string): void => {
    this.store.selectSong(title);
  };

  private async onSelectionChange(selection: Selection, version: number): Promise<void> {
    if (selection.artist === null || selection.decade === null) {
      this.profileDetail = null;
      this.signature = null;
      this.refresh();
      return;
    }
    const sameProfile =
      this.profileDetail !== null &&
      this.profileDetail.artist_norm === selection.artist &&
      this.profileDetail.decade === selection.decade;
    try {
      if (!sameProfile) {
        const detail = await this.client.profile(selection.artist, selection.decade);
        if (this.store.version !== version) return; // stale
        this.profileDetail = detail;
      }
      if (selection.song !== null) {
        const signature = await this.client.songSignature(
          selection.artist,
          selection.decade,
          selection.song,
        );
        if (this.store.version !== version) return; // stale
        this.signature = signature;
      } else {
        this.signature = null;
      }
    } catch (exc) {
      if (this.store.version !== version) return;
      this.profileDetail = null;
      this.signature = null;
      this.views.table = banner(String(exc));
      this.views.profile = banner(String(exc));
      this.renderedVersion = version;
      this.onRender();
      return;
    }
    this.refresh();
  }

  private refresh(): void {
    const selection = this.store.current;
    this.views.bubble = renderBubbleChart(this.artists, this.trajectories, selection, {
      onBubble: this.handleBubbleClick,
    });
    this.views.quadrant = renderQuadrantMap(
      this.artists
        .map((a) => this.trajectories.get(a.name_norm))
        .filter((t): t is Trajectory => t !== undefined),
      this.summary?.median_shape ?? null,
      selection,
      { onPoint: this.handleBubbleClick },
    );
    if (this.profileDetail === null) {
      this.views.table = placeholder("Select a bubble to list songs.");
      this.views.profile = placeholder("Select a bubble to see the audio profile.");
    } else {
      this.views.table = renderSongTable(this.profileDetail, selection, {
        onSong: this.handleSongClick,
      });
      this.views.profile = renderAudioProfile(this.profileDetail, this.signature);
    }
    this.renderedVersion = this.store.version;
    this.onRender();
  }

  /** True when every view reflects the latest selection (nothing stale). */
  get consistent(): boolean {
    return this.renderedVersion === this.store.version;
  }
}

export { ApiClient };

/** Replays a draw-command list onto a 2D canvas context. */

import type { DrawCommand } from "./render.js";

export class ImageCache {
  private images = new Map<string, HTMLImageElement>();

  constructor(private readonly onLoad: () => void) {}

  get(url: string): HTMLImageElement | null {
    const cached = this.images.get(url);
    if (cached) return cached.complete ? cached : null;
    const image = new Image();
    image.src = url;
    image.onload = this.onLoad;
    this.images.set(url, image);
    return null;
  }
}

export function drawCommands(
  ctx: CanvasRenderingContext2D,
  commands: DrawCommand[],
  images: ImageCache,
): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  let noticeRow = 0;
  for (const command of commands) {
    switch (command.kind) {
      case "overlay": {
        const image = images.get(command.url);
        if (image) {
          ctx.drawImage(image, command.at.x, command.at.y, command.width, command.height);
        }
        break;
      }
      case "line":
        ctx.strokeStyle = command.color;
        ctx.lineWidth = command.width;
        ctx.beginPath();
        ctx.moveTo(command.from.x, command.from.y);
        ctx.lineTo(command.to.x, command.to.y);
        ctx.stroke();
        break;
      case "circle":
        ctx.beginPath();
        ctx.arc(command.at.x, command.at.y, command.radius, 0, Math.PI * 2);
        if (command.fill !== "transparent") {
          ctx.fillStyle = command.fill;
          ctx.fill();
        }
        if (command.stroke) {
          ctx.strokeStyle = command.stroke;
          ctx.lineWidth = 1.5;
          ctx.stroke();
        }
        break;
      case "label":
        ctx.fillStyle = command.color;
        ctx.font = "12px sans-serif";
        ctx.fillText(command.text, command.at.x, command.at.y);
        break;
      case "badge":
        ctx.fillStyle = "rgba(0, 0, 0, 0.75)";
        ctx.fillRect(10, 10, 160, 28);
        ctx.fillStyle = "#ffffff";
        ctx.font = "bold 14px sans-serif";
        ctx.fillText(command.text, 18, 29);
        break;
      case "notice":
        ctx.fillStyle = "#b71c1c";
        ctx.font = "12px sans-serif";
        ctx.fillText(command.text, 10, ctx.canvas.height - 12 - 16 * noticeRow);
        noticeRow += 1;
        break;
    }
  }
}
